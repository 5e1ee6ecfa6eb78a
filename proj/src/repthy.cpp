#include "spinlm/repthy.hpp"

#include <algorithm>
#include <numeric>

namespace spinlm {

namespace {

// All permutations fixing each block setwise, as 0-based placement arrays
// with parity signs.
struct BlockPerms {
  std::vector<std::vector<int>> maps;
  std::vector<int> signs;
};

BlockPerms block_permutations(int l, const std::vector<std::vector<int>>& blocks) {
  BlockPerms out;
  std::vector<int> id(l);
  std::iota(id.begin(), id.end(), 0);
  out.maps.push_back(id);
  out.signs.push_back(1);
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> base(block.size());
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> next_maps;
    std::vector<int> next_signs;
    std::vector<int> perm = base;
    do {
      int sign = perm_sign_by_inversions(perm);
      for (size_t i = 0; i < out.maps.size(); ++i) {
        std::vector<int> composed = out.maps[i];
        for (size_t k = 0; k < block.size(); ++k)
          composed[block[k] - 1] = out.maps[i][block[perm[k]] - 1];
        next_maps.push_back(std::move(composed));
        next_signs.push_back(out.signs[i] * sign);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.maps = std::move(next_maps);
    out.signs = std::move(next_signs);
  }
  return out;
}

}  // namespace

YoungData young_data(const Partition& lambda) {
  if (!is_valid_partition(lambda)) throw std::invalid_argument("invalid shape");
  YoungData yd;
  yd.lambda = lambda;
  yd.l = partition_size(lambda);
  int nrows = static_cast<int>(lambda.size());
  int ncols = nrows == 0 ? 0 : lambda[0];
  yd.positions.rows.assign(nrows, {});
  for (int r = 0; r < nrows; ++r) yd.positions.rows[r].resize(lambda[r], 0);
  int next = 1;
  Partition conj = conjugate(lambda);
  for (int c = 0; c < ncols; ++c)
    for (int r = 0; r < conj[c]; ++r) yd.positions.rows[r][c] = next++;
  yd.rows.assign(nrows, {});
  yd.cols.assign(ncols, {});
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < static_cast<int>(yd.positions.rows[r].size()); ++c) {
      int id = yd.positions.rows[r][c];
      yd.rows[r].push_back(id);
      yd.cols[c].push_back(id);
    }
  auto factorial = [](size_t n) {
    long f = 1;
    for (size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
  };
  for (const auto& g : yd.rows) yd.row_order *= factorial(g.size());
  for (const auto& g : yd.cols) yd.col_order *= factorial(g.size());
  return yd;
}

SymmetrizerMaps symmetrizer_maps(const YoungData& yd) {
  BlockPerms rows = block_permutations(yd.l, yd.rows);
  BlockPerms cols = block_permutations(yd.l, yd.cols);
  SymmetrizerMaps sm;
  sm.maps.reserve(rows.maps.size() * cols.maps.size());
  sm.signs.reserve(sm.maps.capacity());
  // Placement arrays compose contravariantly: reading through the column
  // map first, then the row map, applies the row permutation first.
  for (size_t ci = 0; ci < cols.maps.size(); ++ci)
    for (size_t ri = 0; ri < rows.maps.size(); ++ri) {
      std::vector<int> m(yd.l);
      for (int k = 0; k < yd.l; ++k) m[k] = rows.maps[ri][cols.maps[ci][k]];
      sm.maps.push_back(std::move(m));
      sm.signs.push_back(cols.signs[ci]);
    }
  return sm;
}

std::vector<std::vector<int>> module_fillings(const YoungData& yd, int N,
                                              bool column_strict_only) {
  std::vector<std::vector<int>> out;
  if (yd.l == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> fill(yd.l, 1);
  while (true) {
    bool keep = true;
    if (column_strict_only) {
      for (const auto& col : yd.cols) {
        for (size_t i = 0; i + 1 < col.size(); ++i)
          if (fill[col[i] - 1] >= fill[col[i + 1] - 1]) {
            keep = false;
            break;
          }
        if (!keep) break;
      }
    }
    if (keep) out.push_back(fill);
    int i = yd.l - 1;
    while (i >= 0 && fill[i] == N) {
      fill[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++fill[i];
  }
  return out;
}

long o_lambda_dim(const Partition& lambda, int N) {
  QQ field;
  YoungData yd = young_data(lambda);
  Partition conj = conjugate(lambda);
  int c1 = conj.empty() ? 0 : conj[0];
  int c2 = conj.size() > 1 ? conj[1] : 0;
  if (c1 + c2 > N)
    throw std::invalid_argument("column lengths exceed the letter count");
  require_young_feasible(field, yd.l);
  long width = word_space_size(yd.l, N);
  IntEchelon ech(static_cast<int>(width));
  long u_rank = 0;
  for (const auto& tv : contraction_subspace(field, yd.l, N)) {
    std::vector<Rat> row(width, Rat(0));
    for (const auto& [w, c] : tv.terms) row[word_index(w, N)] = c;
    if (ech.insert(row)) ++u_rank;
  }
  long total = u_rank;
  SymmetrizerMaps sm = symmetrizer_maps(yd);
  std::vector<int> out(yd.l);
  for (const auto& fill : module_fillings(yd, N, true)) {
    std::vector<Rat> row(width, Rat(0));
    for (size_t i = 0; i < sm.maps.size(); ++i) {
      for (int k = 0; k < yd.l; ++k) out[k] = fill[sm.maps[i][k]];
      row[word_index(out, N)] += sm.signs[i];
    }
    if (ech.insert(row)) ++total;
  }
  return total - u_rank;
}

std::vector<RepnRow> repn_table(int N, int max_cells) {
  QQ field;
  std::vector<RepnRow> out;
  for (int d = 1; d <= max_cells; ++d)
    for (const Partition& lam : partitions_of(d)) {
      Partition conj = conjugate(lam);
      int c1 = conj.empty() ? 0 : conj[0];
      int c2 = conj.size() > 1 ? conj[1] : 0;
      if (c1 + c2 > N) continue;
      RepnRow row;
      row.N = N;
      row.lambda = lam;
      row.dim_M = m_lambda_dim(field, lam, N);
      row.dim_O = o_lambda_dim(lam, N);
      row.count_ON = static_cast<long>(enumerate_on_standard(lam, N).size());
      row.match = row.dim_O == row.count_ON;
      out.push_back(std::move(row));
    }
  return out;
}

}  // namespace spinlm

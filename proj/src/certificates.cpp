#include "simbasis/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "simbasis/errors.hpp"

namespace simbasis {

std::size_t exact_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Integer& p = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * m[i][j] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), previous.get_mpz_t())) {
          throw InternalError("inexact division in fraction-free elimination");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    if (previous == 0) throw InternalError("zero pivot in fraction-free elimination");
    ++r;
  }
  return r;
}

std::size_t exact_rank(const std::vector<std::vector<std::uint8_t>>& m) {
  if (m.empty()) return 0;
  // Repeated rows or columns never change the rank.
  std::set<std::vector<std::uint8_t>> rows(m.begin(), m.end());
  std::set<std::vector<std::uint8_t>> cols;
  const std::size_t width = m.front().size();
  for (std::size_t c = 0; c < width; ++c) {
    std::vector<std::uint8_t> col;
    for (const auto& row : rows) col.push_back(row[c]);
    cols.insert(std::move(col));
  }
  std::vector<std::vector<Integer>> z;
  for (const auto& col : cols) {
    std::vector<Integer> row;
    for (auto b : col) row.emplace_back(b);
    z.push_back(std::move(row));
  }
  return exact_rank(std::move(z));
}

std::size_t exact_rank(const IncidenceMatrix& a) {
  std::vector<std::vector<std::uint8_t>> m;
  for (std::size_t r = 0; r < a.rows(); ++r) m.push_back(a.row(r));
  return exact_rank(m);
}

namespace {

std::size_t common_prefix(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

TriangularCertificate verify_triangular(const BasisPair& pair, const IncidenceMatrix& a,
                                        const SimplexSet& simplices) {
  TriangularCertificate cert;
  const auto& el = pair.elements;
  cert.order.resize(el.size());
  std::iota(cert.order.begin(), cert.order.end(), 0);
  std::stable_sort(cert.order.begin(), cert.order.end(), [&](std::size_t x, std::size_t y) {
    if (el[x].depth_path != el[y].depth_path) return el[x].depth_path < el[y].depth_path;
    return el[x].simplex < el[y].simplex;
  });

  const std::size_t depth = el.empty() ? 0 : el.front().depth_path.size();
  cert.block_starts.resize(depth);
  for (std::size_t level = 0; level < depth; ++level) {
    for (std::size_t i = 0; i < el.size(); ++i) {
      const auto& cur = el[cert.order[i]].depth_path;
      if (i == 0 || common_prefix(el[cert.order[i - 1]].depth_path, cur) <= level) {
        cert.block_starts[level].push_back(i);
      }
    }
  }

  std::vector<std::size_t> row(el.size());
  for (std::size_t i = 0; i < el.size(); ++i) {
    row[i] = simplices.index_of(el[cert.order[i]].simplex);
    if (row[i] == SIZE_MAX) throw InternalError("basis simplex missing from Sigma");
  }
  auto level_of = [&](std::size_t i, std::size_t j) {
    const std::size_t c = common_prefix(el[cert.order[i]].depth_path, el[cert.order[j]].depth_path);
    return depth == 0 ? 0 : std::min(c, depth - 1);
  };
  for (std::size_t i = 0; i < el.size() && !cert.violation; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto entry = a.at(row[i], el[cert.order[j]].chamber);
      const bool bad = (i == j) ? entry != 1 : entry != 0;
      if (!bad) continue;
      const std::size_t level = level_of(i, j);
      cert.violation = TriangularViolation{i, j, level, static_cast<char>('A' + std::min<std::size_t>(level, 25)),
                                           i == j};
      break;
    }
  }
  return cert;
}

RankReport verify_basis(const BasisPair& pair, const IncidenceMatrix& a, const SimplexSet& simplices) {
  RankReport report;
  report.rank_A = exact_rank(a);
  report.basis_size = pair.size();
  std::set<std::size_t> chambers;
  for (const auto& e : pair.elements) chambers.insert(e.chamber);
  report.chamber_basis_size = chambers.size();

  std::vector<std::vector<std::uint8_t>> sub, rows;
  for (const auto& e : pair.elements) {
    const std::size_t r = simplices.index_of(e.simplex);
    if (r == SIZE_MAX) throw InternalError("basis simplex missing from Sigma");
    rows.push_back(a.row(r));
    std::vector<std::uint8_t> line;
    for (const auto& f : pair.elements) line.push_back(a.at(r, f.chamber));
    sub.push_back(std::move(line));
  }
  std::vector<std::vector<std::uint8_t>> cols;
  for (const auto& e : pair.elements) {
    std::vector<std::uint8_t> col;
    for (std::size_t r = 0; r < a.rows(); ++r) col.push_back(a.at(r, e.chamber));
    cols.push_back(std::move(col));
  }
  // exact_rank collapses duplicates, so compute these on the raw lists.
  report.submatrix_rank = pair.size() == 0 ? 0 : exact_rank(sub);
  report.submatrix_nonsingular = report.submatrix_rank == pair.size();
  report.basis_rows_rank = rows.empty() ? 0 : exact_rank(rows);
  report.chamber_columns_rank = cols.empty() ? 0 : exact_rank(cols);
  report.spans = report.basis_size == report.rank_A && report.basis_rows_rank == report.rank_A &&
                 report.chamber_basis_size == report.rank_A &&
                 report.chamber_columns_rank == report.rank_A;
  return report;
}

}  // namespace simbasis

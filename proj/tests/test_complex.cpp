#include <doctest.h>

#include <random>

#include "simbasis/certificates.hpp"
#include "simbasis/chamber_complex.hpp"
#include "simbasis/errors.hpp"
#include "support.hpp"

using namespace simbasis;

namespace {

// The chamber enumeration must see every sampled membership pattern, and
// every chamber pattern is a column of A.
void check_against_samples(const ChamberComplex& cc, int steps) {
  const auto sampled = oracle::sampled_signatures(cc.config, steps);
  const auto columns = oracle::matrix_columns(cc.matrix);
  for (const auto& sig : sampled) CHECK(columns.count(sig) == 1);
}

}  // namespace

TEST_SUITE("chambers") {
  TEST_CASE("simplex enumeration matches a brute-force oracle") {
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
      const auto c = oracle::random_configuration(rng, 2 + t % 2, 5 + t % 3);
      CHECK(enumerate_simplices(c).simplices == oracle::simplices(c));
    }
  }

  TEST_CASE("single simplex") {
    for (const auto& c : {oracle::triangle(), oracle::tetrahedron()}) {
      ChamberComplex cc(c);
      CHECK(cc.simplices.size() == 1);
      CHECK(cc.chambers().size() == 1);
      CHECK(cc.matrix.row_string(0) == "1");
    }
  }

  TEST_CASE("convex quadrilateral: four chambers cut by the diagonals") {
    ChamberComplex cc(oracle::quadrilateral());
    CHECK(cc.simplices.size() == 4);
    CHECK(cc.chambers().size() == 4);
    CHECK(cc.enumeration.merge_count == 0);
    CHECK(cc.enumeration.cells_volume == cc.enumeration.hull_volume);
    CHECK(oracle::rank(cc.matrix) == 3);
    // Each triangle holds two of the four chambers.
    for (std::size_t r = 0; r < 4; ++r) {
      const auto row = cc.matrix.row(r);
      CHECK(std::count(row.begin(), row.end(), 1) == 2);
    }
    check_against_samples(cc, 24);
    CHECK(oracle::matrix_columns(cc.matrix).size() == 4);
  }

  TEST_CASE("triangle with an interior point") {
    ChamberComplex cc(oracle::triangle_with_center());
    CHECK(cc.simplices.size() == 4);
    CHECK(cc.chambers().size() == 3);
    // The three lines through the centre cut six cells; the extensions past
    // the centre are not simplex edges, so cells merge pairwise.
    CHECK(cc.enumeration.cell_count == 6);
    CHECK(cc.enumeration.merge_count == 3);
    CHECK(oracle::rank(cc.matrix) == 3);
    CHECK(cc.matrix.row_string(cc.simplices.index_of(Simplex{1, 2, 3})) == "111");
    check_against_samples(cc, 30);
    for (const auto& ch : cc.chambers()) CHECK(is_convex(ch));
  }

  TEST_CASE("tetrahedron with an interior point") {
    ChamberComplex cc(oracle::tetrahedron_with_center());
    CHECK(cc.simplices.size() == 5);
    CHECK(cc.chambers().size() == 4);
    CHECK(oracle::rank(cc.matrix) == 4);
    CHECK(cc.enumeration.cells_volume == cc.enumeration.hull_volume);
    check_against_samples(cc, 10);
  }

  TEST_CASE("random configurations: volume, samples, distinct columns") {
    std::mt19937 rng(44);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + t % 2;
      const auto c = oracle::random_configuration(rng, n, n == 2 ? 6 : 5);
      ChamberComplex cc(c);
      CHECK(cc.enumeration.cells_volume == cc.enumeration.hull_volume);
      check_against_samples(cc, n == 2 ? 20 : 8);
      // Representatives are interior to every simplex of their column and
      // chambers are sorted by representative.
      for (std::size_t i = 1; i < cc.chambers().size(); ++i) {
        CHECK(cc.chambers()[i - 1].representative < cc.chambers()[i].representative);
      }
      for (const auto& ch : cc.chambers()) {
        for (std::size_t r = 0; r < cc.simplices.size(); ++r) {
          const auto& s = cc.simplices.simplices[r];
          CHECK(oracle::strictly_inside(ch.representative, c.vertices(s)) == (cc.matrix.at(r, ch.id) == 1));
        }
      }
    }
  }

  TEST_CASE("flat simplices have an empty chamber vector") {
    const auto c = oracle::make(2, {{0, 0}, {2, 0}, {4, 0}, {0, 3}});
    ChamberComplex cc(c);
    const auto v = cc.row_of(Simplex{1, 2, 3});
    CHECK(std::count(v.begin(), v.end(), 1) == 0);
  }
}

TEST_SUITE("rank") {
  TEST_CASE("fraction-free rank agrees with plain elimination") {
    std::mt19937 rng(9);
    for (int t = 0; t < 200; ++t) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      std::vector<std::vector<Integer>> z(rows, std::vector<Integer>(cols));
      std::vector<RationalVector> q(rows, RationalVector(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          const long v = (rng() % 3 == 0) ? 0 : static_cast<long>(rng() % 11) - 5;
          z[i][j] = v;
          q[i][j] = v;
        }
      }
      // Make some rows dependent.
      if (rows > 2) {
        for (std::size_t j = 0; j < cols; ++j) {
          z[rows - 1][j] = z[0][j] * 3 - z[1][j];
          q[rows - 1][j] = q[0][j] * 3 - q[1][j];
        }
      }
      CHECK(exact_rank(z) == oracle::rank(q));
    }
  }

  TEST_CASE("0/1 rank collapses duplicates without changing the answer") {
    std::vector<std::vector<std::uint8_t>> m{{1, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(exact_rank(m) == 3);
    std::vector<std::vector<std::uint8_t>> dup{{1, 0, 1}, {1, 0, 1}};
    CHECK(exact_rank(dup) == 1);
  }
}

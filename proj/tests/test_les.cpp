#include <stdexcept>

#include "doctest.h"
#include "hochlab/les.hpp"

using namespace hochlab;

TEST_CASE("the ladder of a unitized matrix algebra is exact") {
  auto ext = unitization_extension(make_matrix_algebra(2));
  auto rep = les_of_subcomplex(ext, ComplexKind::hochschild, 2);

  CHECK(rep.exact);
  for (const auto& jc : rep.junctions) {
    CAPTURE(jc.node);
    CAPTURE(jc.degree);
    CHECK(jc.composite_zero);
    CHECK(jc.incoming_rank == jc.outgoing_nullity);
  }

  // Adding a unit to a unital algebra splits off scalars: two classes at the
  // bottom, nothing above.
  CHECK(rep.ideal_dims == std::vector<Index>{1, 0, 0});
  CHECK(rep.total_dims == std::vector<Index>{2, 0, 0});
}

TEST_CASE("the ladder survives a genuinely noncommutative multiplier") {
  auto f = make_shift_frame(1, 2);  // M = 2
  auto ext = conjugator_extension(f, 1);
  auto rep = les_of_subcomplex(ext, ComplexKind::hochschild, 2);
  CHECK(rep.exact);
  CHECK(rep.ideal_dims == std::vector<Index>{1, 0, 0});
}

TEST_CASE("exactness also holds for the bar ladder") {
  auto ext = unitization_extension(make_matrix_algebra(2));
  auto rep = les_of_subcomplex(ext, ComplexKind::bar, 2);
  CHECK(rep.exact);
  // Unital algebras have acyclic bar complexes, so every ladder entry of the
  // total algebra vanishes.
  CHECK(rep.total_dims == std::vector<Index>{0, 0, 0});
}

TEST_CASE("the ladder is exact even when excision fails") {
  auto ext = unitization_extension(make_square_zero_algebra(1));
  auto rep = les_of_subcomplex(ext, ComplexKind::hochschild, 2);
  CHECK(rep.exact);

  // The ideal keeps classes in every degree; the ladder has to absorb them.
  CHECK(rep.ideal_dims == std::vector<Index>{1, 1, 1});
}

TEST_CASE("excision holds for a unital ideal and fails for a square-zero one") {
  auto good = excision_compare(unitization_extension(make_matrix_algebra(2)),
                               ComplexKind::hochschild, 2);
  CHECK(good.all_iso);
  for (const auto& ed : good.degrees) CHECK(ed.iso);

  auto bad = excision_compare(unitization_extension(make_square_zero_algebra(1)),
                              ComplexKind::hochschild, 2);
  CHECK(!bad.all_iso);
  CHECK(bad.degrees[0].iso);
  CHECK(!bad.degrees[1].iso);
}

TEST_CASE("connecting classes do not depend on the choice of lift") {
  auto ext = unitization_extension(make_square_zero_algebra(1));
  auto ws = les_workspace(ext, ComplexKind::hochschild, 2);

  for (int n = 1; n <= 2; ++n) {
    for (const auto& r : ws.hq[n].representatives) {
      SparseVec lift = quotient_lift(ws, n, r);
      SparseVec klass = connecting_class(ws, n, lift);

      // Perturb by embedded subcomplex elements: same class.
      for (std::size_t t = 0; t < ws.sub[n].basis().size(); t += 2) {
        SparseVec other = lift;
        other.axpy(rat_of(3, 2), ws.sub[n].basis()[t]);
        CHECK(connecting_class(ws, n, other) == klass);
      }
    }
  }
}

TEST_CASE("projection and lift are inverse on quotient coordinates") {
  auto ext = unitization_extension(make_matrix_algebra(2));
  auto ws = les_workspace(ext, ComplexKind::hochschild, 1);
  for (int n = 0; n <= 1; ++n) {
    for (Index pos = 0; pos < static_cast<Index>(ws.axes[n].size()); pos += 3) {
      SparseVec q;
      q.set(pos, rat_of(-7, 3));
      CHECK(quotient_project(ws, n, quotient_lift(ws, n, q)) == q);
    }
    // Projection kills the embedded complex.
    for (const auto& b : ws.sub[n].basis())
      CHECK(quotient_project(ws, n, b).is_zero());
  }
}

TEST_CASE("budget violations are reported before any work happens") {
  auto ext = unitization_extension(make_matrix_algebra(2));
  CHECK_THROWS_AS(les_of_subcomplex(ext, ComplexKind::hochschild, 2, 100),
                  std::length_error);
}

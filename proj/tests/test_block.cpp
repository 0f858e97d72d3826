#include "dzb/errors.hpp"
#include "dzb/hecke.hpp"

#include <doctest.h>

using namespace dzb;

namespace {

BlockAlgebra split_block(const RootDatum& d, const QVec& theta, std::int64_t q) {
  const FrobeniusAction F(IMat::identity(d.rank()), q, d);
  return build_block_algebra(d, F, TorusCharacter(theta), {});
}

}  // namespace

TEST_CASE("SL2 Iwahori block is the one-parameter affine Hecke algebra") {
  for (std::int64_t q : {3, 5, 7}) {
    const BlockAlgebra B = split_block(simply_connected("A1"), {0}, q);
    REQUIRE(B.hecke.has_value());
    CHECK_FALSE(B.is_twisted_lattice_algebra());
    CHECK(B.hecke->realization().size() == 2);
    CHECK(B.hecke->exponents() == std::vector<int>{1, 1});  // q_s = q_F on both affine generators
    REQUIRE(B.reflecting.size() == 1);
    CHECK(B.reflecting[0].q == q);
    CHECK(B.reflecting[0].kind == GroupKind::SL2);
    CHECK(B.r_sigma.size() == 2);
    CHECK(B.dual_roots.size() == 2);
    CHECK(B.weyl_order_sigma == 2);
    CHECK(B.weyl_order_sigma == B.weyl_order_dual);
    CHECK(B.parameter_preserving);
    CHECK(B.gamma.size() == 1);
    CHECK(B.hecke->check_relations(4).ok);
  }
}

TEST_CASE("SL2 Legendre block is a twisted lattice algebra") {
  for (std::int64_t q : {3, 5, 7}) {
    const BlockAlgebra B = split_block(simply_connected("A1"), {Rational(1, 2)}, q);
    CHECK(B.is_twisted_lattice_algebra());
    CHECK(B.r_sigma.empty());
    CHECK(B.dual_roots.empty());
    REQUIRE(B.reflecting.size() == 1);
    CHECK(B.reflecting[0].q == 1);
    CHECK(B.reflecting[0].norm_pairing == Rational(1, 2));
    CHECK(B.stabilizer.size() == 2);
    CHECK(B.gamma.size() == 2);
    CHECK(B.weyl_order_sigma == 1);
    CHECK(B.weyl_order_dual == 1);
    CHECK(B.omega_translation_rank == 1);
    CHECK(B.omega_finite_order == 2);
    CHECK(B.parameter_preserving);
  }
}

TEST_CASE("other rank-one and rank-two blocks") {
  {
    const BlockAlgebra B = split_block(adjoint("A1"), {Rational(1, 2)}, 5);
    CHECK_FALSE(B.is_twisted_lattice_algebra());
    CHECK(B.reflecting[0].kind == GroupKind::PGL2);
    CHECK(B.reflecting[0].q == 5);
    CHECK(B.omega_generators.size() == 1);
    CHECK(B.omega_finite_order == 2);
  }
  {
    const BlockAlgebra B = split_block(gl_datum(2), {0, Rational(1, 2)}, 3);
    CHECK(B.is_twisted_lattice_algebra());
    CHECK(B.stabilizer.size() == 1);
    CHECK(B.omega_translation_rank == 2);
  }
  {
    const BlockAlgebra B = split_block(simply_connected("C2"), {0, 0}, 3);
    CHECK(B.weyl_order_sigma == 8);
    CHECK(B.weyl_order_dual == 8);
    CHECK(B.reflecting.size() == 4);
    for (const auto& r : B.reflecting) CHECK(r.q == 3);
    CHECK(B.hecke->exponents() == std::vector<int>{1, 1, 1});
  }
  {
    // θ = (1/2, 0) on Sp4: one reflecting root gives q = 3, the other is a Legendre-type root with q = 1.
    const BlockAlgebra B = split_block(simply_connected("C2"), {Rational(1, 2), 0}, 3);
    CHECK(B.stabilizer.size() == 4);
    CHECK(B.gamma.size() == 2);
    CHECK(B.r_sigma.size() == 2);
    CHECK(B.weyl_order_sigma == 2);
    CHECK(B.weyl_order_dual == 2);
    int trivial = 0, full = 0;
    for (const auto& r : B.reflecting) (r.q == 1 ? trivial : full) += 1;
    CHECK(trivial == 1);
    CHECK(full == 1);
    CHECK(B.parameter_preserving);
    CHECK(B.hecke->check_relations(4).ok);
  }
  {
    const BlockAlgebra B = split_block(simply_connected("A2"), {Rational(1, 3), Rational(1, 3)}, 7);
    CHECK(B.is_twisted_lattice_algebra());
    CHECK(B.stabilizer.size() == 3);
    CHECK(B.gamma.size() == 3);
    CHECK(B.omega_finite_order == 3);
    CHECK(B.omega_translation_rank == 2);
  }
}

TEST_CASE("block assembly rejects invalid characters") {
  const RootDatum d = simply_connected("A1");
  const FrobeniusAction F(IMat::identity(1), 5, d);
  CHECK_THROWS_AS(build_block_algebra(d, F, TorusCharacter(QVec{Rational(1, 3)}), {}), InvalidCharacter);
}

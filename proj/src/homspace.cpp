#include "homcas/homspace.hpp"

#include <string>

#include "homcas/errors.hpp"

namespace homcas {

HomObject::HomObject(Matrix mu) : mu_(std::move(mu)) {
  if (!mu_.is_square()) throw InputError("automorphism must be square");
  mu_inv_ = invert(mu_);
}

Matrix HomObject::mu_power(int k) const {
  if (k >= 0) return mu_.power(k);
  return mu_inv_.power(-k);
}

HomMorphism::HomMorphism(HomObject source, HomObject target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.rows() != target_.dim() || map_.cols() != source_.dim())
    throw InputError("morphism matrix has wrong shape");
  if (!intertwines(source_, target_, map_))
    throw NotAMorphism("map does not commute with the automorphisms");
}

bool HomMorphism::intertwines(const HomObject& source, const HomObject& target, const Matrix& map) {
  return target.mu() * map == map * source.mu();
}

HomMorphism HomMorphism::identity(const HomObject& m) {
  return HomMorphism(m, m, Matrix::identity(m.dim()));
}

HomObject tensor(const HomObject& m, const HomObject& n) { return HomObject(kron(m.mu(), n.mu())); }

HomMorphism tensor(const HomMorphism& f, const HomMorphism& g) {
  return HomMorphism(tensor(f.source(), g.source()), tensor(f.target(), g.target()),
                     kron(f.map(), g.map()));
}

HomMorphism compose(const HomMorphism& g, const HomMorphism& f) {
  if (!(f.target() == g.source())) throw InputError("compose: target/source mismatch");
  return HomMorphism(f.source(), g.target(), g.map() * f.map());
}

HomMorphism associator(const HomObject& m, const HomObject& n, const HomObject& p) {
  HomObject mnp = tensor(tensor(m, n), p);
  return HomMorphism(mnp, mnp, kron({m.mu(), Matrix::identity(n.dim()), p.mu_inv()}));
}

HomMorphism associator_inverse(const HomObject& m, const HomObject& n, const HomObject& p) {
  HomObject mnp = tensor(tensor(m, n), p);
  return HomMorphism(mnp, mnp, kron({m.mu_inv(), Matrix::identity(n.dim()), p.mu()}));
}

UnitConstraints unit_constraints(const HomObject& m) {
  // I⊗M and M⊗I flatten to M itself.
  return {HomMorphism(m, m, m.mu()), HomMorphism(m, m, m.mu())};
}

HomMorphism braiding(const HomObject& m, const HomObject& n) {
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  std::vector<std::size_t> image(dm * dn);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) image[i * dn + j] = j * dm + i;
  return HomMorphism(tensor(m, n), tensor(n, m), Matrix::permutation(image));
}

LeftDual left_dual(const HomObject& m) {
  const std::size_t n = m.dim();
  const Matrix mu_star = m.mu().transpose();
  HomObject dual(invert(mu_star));
  // d(f⊗x) = f(x) and b(1) = sum_i e_i⊗e_i*.
  Matrix d(1, n * n);
  Matrix b(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    d(0, i * n + i) = 1;
    b(i * n + i, 0) = 1;
  }
  Matrix ev = d * kron(mu_star, m.mu());
  Matrix coev = kron(m.mu_inv(), invert(mu_star)) * b;
  return {dual, HomMorphism(tensor(dual, m), HomObject::unit(), std::move(ev)),
          HomMorphism(HomObject::unit(), tensor(m, dual), std::move(coev))};
}

namespace {

void compare(Report& report, const std::string& axiom, const Matrix& lhs, const Matrix& rhs,
             std::size_t tuple_index) {
  auto& r = report.axiom(axiom);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.fail({tuple_index}, "shape mismatch");
    return;
  }
  std::size_t col = lhs.first_differing_column(rhs);
  if (col < lhs.cols()) r.fail({tuple_index, col}, "sides differ on basis column " + std::to_string(col));
}

Matrix id(const HomObject& m) { return Matrix::identity(m.dim()); }

}  // namespace

Report verify_constraints(const std::vector<HomObject>& objects) {
  if (objects.empty()) throw InputError("verify_constraints needs at least one object");
  Report report;
  auto at = [&](std::size_t i) -> const HomObject& { return objects[i % objects.size()]; };
  const HomObject I = HomObject::unit();

  {
    const HomObject &M = at(0), &N = at(1);
    Matrix lhs = kron(id(M), unit_constraints(N).left.map()) * associator(M, I, N).map();
    Matrix rhs = kron(unit_constraints(M).right.map(), id(N));
    compare(report, "triangle", lhs, rhs, 0);
  }
  {
    const HomObject &M = at(0), &N = at(1), &P = at(2), &Q = at(3);
    Matrix lhs = kron(id(M), associator(N, P, Q).map()) *
                 associator(M, tensor(N, P), Q).map() * kron(associator(M, N, P).map(), id(Q));
    Matrix rhs = associator(M, N, tensor(P, Q)).map() * associator(tensor(M, N), P, Q).map();
    compare(report, "pentagon", lhs, rhs, 0);
  }
  {
    const HomObject &M = at(0), &N = at(1), &P = at(2);
    // (H1) ã_{N,P,M} c_{M,N⊗P} ã_{M,N,P} = (N⊗c_{M,P}) ã_{N,M,P} (c_{M,N}⊗P)
    Matrix lhs1 = associator(N, P, M).map() * braiding(M, tensor(N, P)).map() *
                  associator(M, N, P).map();
    Matrix rhs1 = kron(id(N), braiding(M, P).map()) * associator(N, M, P).map() *
                  kron(braiding(M, N).map(), id(P));
    compare(report, "hexagon_h1", lhs1, rhs1, 0);
    // (H2) ã⁻¹_{P,M,N} c_{M⊗N,P} ã⁻¹_{M,N,P} = (c_{M,P}⊗N) ã⁻¹_{M,P,N} (M⊗c_{N,P})
    Matrix lhs2 = associator_inverse(P, M, N).map() * braiding(tensor(M, N), P).map() *
                  associator_inverse(M, N, P).map();
    Matrix rhs2 = kron(braiding(M, P).map(), id(N)) * associator_inverse(M, P, N).map() *
                  kron(id(M), braiding(N, P).map());
    compare(report, "hexagon_h2", lhs2, rhs2, 0);
    compare(report, "symmetry", braiding(N, M).map() * braiding(M, N).map(),
            Matrix::identity(M.dim() * N.dim()), 0);
  }
  for (std::size_t t = 0; t < objects.size(); ++t) {
    const HomObject& M = objects[t];
    LeftDual D = left_dual(M);
    const HomObject& Ms = D.dual;
    UnitConstraints um = unit_constraints(M);
    UnitConstraints us = unit_constraints(Ms);
    // r̃_M (M⊗d̃) ã_{M,M*,M} (b̃⊗M) l̃_M^{-1} = M
    Matrix z1 = um.right.map() * kron(id(M), D.evaluation.map()) *
                associator(M, Ms, M).map() * kron(D.coevaluation.map(), id(M)) * invert(um.left.map());
    compare(report, "zigzag_left", z1, id(M), t);
    // l̃_{M*} (d̃⊗M*) ã⁻¹_{M*,M,M*} (M*⊗b̃) r̃_{M*}^{-1} = M*
    Matrix z2 = us.left.map() * kron(D.evaluation.map(), id(Ms)) *
                associator_inverse(Ms, M, Ms).map() * kron(id(Ms), D.coevaluation.map()) *
                invert(us.right.map());
    compare(report, "zigzag_right", z2, id(Ms), t);
  }
  return report;
}

Report verify_associator_naturality(const HomMorphism& f, const HomMorphism& g,
                                    const HomMorphism& h) {
  Report report;
  Matrix lhs = associator(f.target(), g.target(), h.target()).map() *
               kron({f.map(), g.map(), h.map()});
  Matrix rhs = kron({f.map(), g.map(), h.map()}) *
               associator(f.source(), g.source(), h.source()).map();
  compare(report, "associator_naturality", lhs, rhs, 0);
  return report;
}

}  // namespace homcas

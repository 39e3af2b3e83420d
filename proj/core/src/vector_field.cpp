#include "projflow/vector_field.hpp"

#include "projflow/errors.hpp"

namespace projflow {

Mat2 Mat2::inverse() const {
  Rat D = det();
  if (D == 0) raise(Errc::SingularMatrix, "linear map is not invertible");
  return {Rat(d / D), Rat(-b / D), Rat(-c / D), Rat(a / D)};
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {Rat(l.a * r.a + l.b * r.c), Rat(l.a * r.b + l.b * r.d), Rat(l.c * r.a + l.d * r.c),
          Rat(l.c * r.b + l.d * r.d)};
}

bool VectorField::is_quadratic() const {
  auto quad = [](const RationalFunction2& f) {
    return f.is_polynomial() && (f.is_zero() || f.num().homogeneous_degree() == 2);
  };
  return quad(pi_) && quad(rho_);
}

RationalFunction2 VectorField::cross() const {
  return RationalFunction2(BivarPoly::y()) * pi_ - RationalFunction2(BivarPoly::x()) * rho_;
}

VectorField make_vector_field(const RationalFunction2& pi, const RationalFunction2& rho) {
  auto check = [](const RationalFunction2& f, const char* name) {
    if (f.is_zero() || f.euler_homogeneous(2)) return;
    auto d = f.homogeneous_degree();
    throw Error(Errc::NotHomogeneous,
                std::string(name) + " is not 2-homogeneous: " + to_string(f) +
                    (d ? " has degree " + std::to_string(*d) : " mixes degrees"),
                name, d ? std::optional<long>(*d) : std::nullopt);
  };
  check(pi, "pi");
  check(rho, "rho");
  return VectorField(pi, rho);
}

VectorField quadratic_field(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return quadratic_field6(a, b, Rat(0), Rat(0), c, d);
}

VectorField quadratic_field6(const Rat& p0, const Rat& p1, const Rat& p2, const Rat& r0, const Rat& r1, const Rat& r2) {
  BivarPoly pi = BivarPoly::monomial(2, 0, p0) + BivarPoly::monomial(1, 1, p1) + BivarPoly::monomial(0, 2, p2);
  BivarPoly rho = BivarPoly::monomial(2, 0, r0) + BivarPoly::monomial(1, 1, r1) + BivarPoly::monomial(0, 2, r2);
  return make_vector_field(pi, rho);
}

VectorField conjugate_linear(const VectorField& vf, const Mat2& L) {
  Mat2 Li = L.inverse();
  RationalFunction2 P = vf.pi().substitute_linear(L.a, L.b, L.c, L.d);
  RationalFunction2 R = vf.rho().substitute_linear(L.a, L.b, L.c, L.d);
  return make_vector_field(P * Li.a + R * Li.b, P * Li.c + R * Li.d);
}

VectorField conjugate_by_multiplier(const VectorField& vf, const RationalFunction2& A) {
  if (A.is_zero() || !A.euler_homogeneous(0)) {
    raise(Errc::NotZeroHomogeneous, "multiplier " + to_string(A) + " is not a nonzero 0-homogeneous function");
  }
  RationalFunction2 w = -vf.cross();  // xϱ − yϖ
  RationalFunction2 eta = A * vf.pi() - A.dy() * w;
  RationalFunction2 nu = A * vf.rho() + A.dx() * w;
  return make_vector_field(eta, nu);
}

std::pair<long double, long double> conjugate_by_multiplier_at(
    const VectorField& vf, const std::function<long double(long double)>& a,
    const std::function<long double(long double)>& da, long double x, long double y) {
  const long double t = x / y;
  const long double A = a(t);
  const long double Ax = da(t) / y;
  const long double Ay = -da(t) * x / (y * y);
  const long double p = vf.pi().eval(x, y);
  const long double r = vf.rho().eval(x, y);
  const long double w = x * r - y * p;
  return {A * p - Ay * w, A * r + Ax * w};
}

std::string to_string(const VectorField& vf) { return to_string(vf.pi()) + " • " + to_string(vf.rho()); }

}  // namespace projflow

#ifndef SCF_FIELD_PARAM_HPP
#define SCF_FIELD_PARAM_HPP

#include <scf/integer.hpp>

#include <stdexcept>

namespace scf {

/// The parameter a >= 1 of f_a = x^3 - a x^2 - (a+3) x - 1, with m = a^2 + 3a + 9.
class FieldParam {
 public:
  explicit FieldParam(const Integer& a) : a_(a), m_(a * a + 3 * a + 9) {
    if (a_ < 1) throw std::invalid_argument("field parameter a must be >= 1, got " + a_.get_str());
  }
  explicit FieldParam(long a) : FieldParam(Integer(a)) {}

  const Integer& a() const { return a_; }
  const Integer& m() const { return m_; }
  /// 2a + 3, the norm of alpha - 1 and the theorem's threshold.
  Integer threshold() const { return Integer(2 * a_ + 3); }

  /// Trial division; recomputed on every call.
  bool m_squarefree() const { return is_squarefree(m_); }

  /// f_a(x).
  template <class R>
  R defining_poly(const R& x) const {
    return R(R(R(x * x) * x) - R(R(a_) * R(x * x)) - R(R(a_ + 3) * x) - R(1L));
  }

  friend bool operator==(const FieldParam& x, const FieldParam& y) { return x.a_ == y.a_; }

 private:
  Integer a_;
  Integer m_;
};

}  // namespace scf

#endif  // SCF_FIELD_PARAM_HPP

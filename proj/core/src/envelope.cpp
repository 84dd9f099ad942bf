#include "phk/envelope.hpp"

#include <numeric>
#include <string>

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

UElement UElement::one(std::size_t nvars) { return basis(Monomial(nvars), Monomial(nvars)); }

UElement UElement::m(const Poly& f) {
  UElement out(f.nvars());
  Monomial none(f.nvars());
  for (const auto& [mono, c] : f.terms()) out.terms_.add_term({mono, none}, c);
  return out;
}

UElement UElement::h(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw StructureError("h generator index out of range");
  return basis(Monomial(nvars), Monomial::variable(nvars, i));
}

UElement UElement::basis(const Monomial& mpart, const Monomial& hpart, const Rational& c) {
  if (mpart.nvars() != hpart.nvars()) throw StructureError("m- and h-parts over different variable counts");
  UElement out(mpart.nvars());
  out.terms_.add_term({mpart, hpart}, c);
  return out;
}

void UElement::add_term(const Key& k, const Rational& c) {
  if (k.first.nvars() != nvars_ || k.second.nvars() != nvars_) {
    throw StructureError("PBW monomial over the wrong number of variables");
  }
  terms_.add_term(k, c);
}

void UElement::require_same(const UElement& o) const {
  if (nvars_ != o.nvars_) throw StructureError("enveloping-algebra elements over different algebras");
}

UElement& UElement::operator+=(const UElement& o) {
  require_same(o);
  terms_ += o.terms_;
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  require_same(o);
  terms_ -= o.terms_;
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  terms_ *= c;
  return *this;
}

std::string format_uelement(const UElement& u, const std::vector<std::string>& names) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [key, c] = *it;
    std::vector<std::string> factors;
    if (!key.first.is_one()) factors.push_back("m[" + format_poly(Poly::term(key.first, Rational(1)), names) + "]");
    for (std::size_t i = 0; i < key.second.nvars(); ++i) {
      if (key.second[i] == 0) continue;
      std::string f = "h[" + names[i] + "]";
      if (key.second[i] > 1) f += "^" + std::to_string(key.second[i]);
      factors.push_back(f);
    }
    Rational a = abs(c);
    std::string body;
    if (factors.empty()) {
      body = to_string(a);
    } else {
      if (a != 1) body = to_string(a) + "*";
      for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    }
    if (first) {
      out += (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

EnvelopeAlgebra::EnvelopeAlgebra(PoissonStructure P) : P_(std::move(P)) {
  if (!P_.verified()) throw UnverifiedError("the enveloping algebra requires a verified Poisson structure");
}

const UElement& EnvelopeAlgebra::h_times_word(std::size_t i, const Monomial& beta) const {
  auto key = std::make_pair(i, beta);
  if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;

  const std::size_t n = nvars();
  std::size_t j = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (beta[k] > 0) {
      j = k;
      break;
    }
  }

  UElement result(n);
  if (j == n || i <= j) {
    Monomial word = beta;
    word[i] += 1;
    result = UElement::basis(Monomial(n), word);
  } else {
    // h_i h_j h^{β'} = h_j (h_i h^{β'}) − h_{{x_j,x_i}} h^{β'}.
    Monomial rest = beta;
    rest[j] -= 1;
    UElement inner = h_times_word(i, rest);
    result = left_mul_h(j, inner);
    UElement correction = expand_h(P_.entry(j, i));
    for (const auto& [k, c] : correction.terms()) {
      std::size_t hk = 0;
      while (k.second[hk] == 0) ++hk;
      for (const auto& [kk, cc] : h_times_word(hk, rest).terms()) {
        result.add_term({k.first * kk.first, kk.second}, -c * cc);
      }
    }
  }
  return word_cache_.emplace(std::move(key), std::move(result)).first->second;
}

UElement EnvelopeAlgebra::left_mul_h(std::size_t i, const UElement& u) const {
  const std::size_t n = nvars();
  UElement out(n);
  for (const auto& [k, c] : u.terms()) {
    const auto& [gamma, eps] = k;
    // h_i m_γ = m_γ h_i + m_{{x_i, x^γ}}.
    for (const auto& [kk, cc] : h_times_word(i, eps).terms()) out.add_term({gamma * kk.first, kk.second}, c * cc);
    if (!gamma.is_one()) {
      Poly br = hamiltonian(P_, i, Poly::term(gamma, Rational(1)));
      for (const auto& [mono, cb] : br.terms()) out.add_term({mono, eps}, c * cb);
    }
  }
  return out;
}

UElement EnvelopeAlgebra::multiply(const UElement& u, const UElement& v) const {
  const std::size_t n = nvars();
  if (u.nvars() != n || v.nvars() != n) throw StructureError("u_mul: operands over the wrong algebra");
  UElement out(n);
  for (const auto& [k, c] : u.terms()) {
    const auto& [alpha, beta] = k;
    UElement x = v;
    // h^β = h_1^{β_1} ... h_n^{β_n}; apply the rightmost factor first.
    for (std::size_t i = n; i-- > 0;) {
      for (std::uint32_t e = 0; e < beta[i]; ++e) x = left_mul_h(i, x);
    }
    for (const auto& [kx, cx] : x.terms()) out.add_term({alpha * kx.first, kx.second}, c * cx);
  }
  return out;
}

UElement EnvelopeAlgebra::power(const UElement& u, unsigned e) const {
  UElement result = UElement::one(nvars());
  for (unsigned k = 0; k < e; ++k) result = multiply(result, u);
  return result;
}

namespace {

UElement expand_h_monomial(const Monomial& alpha) {
  const std::size_t n = alpha.nvars();
  std::size_t i = 0;
  while (i < n && alpha[i] == 0) ++i;
  if (i == n) return UElement(n);  // h_1 = 0
  Monomial rest = alpha;
  rest[i] -= 1;
  // h_{x_i r} = m_r h_{x_i} + m_{x_i} h_r.
  UElement out = UElement::basis(rest, Monomial::variable(n, i));
  Monomial xi = Monomial::variable(n, i);
  UElement tail = expand_h_monomial(rest);
  for (const auto& [k, c] : tail.terms()) out.add_term({xi * k.first, k.second}, c);
  return out;
}

}  // namespace

UElement EnvelopeAlgebra::expand_h(const Poly& p) const { return phk::expand_h(P_, p); }

UElement expand_h(const PoissonStructure& P, const Poly& p) {
  if (p.nvars() != P.nvars()) throw StructureError("expand_h: polynomial over the wrong ring");
  UElement out(p.nvars());
  for (const auto& [mono, c] : p.terms()) out += expand_h_monomial(mono) * c;
  return out;
}

UElement u_mul(const PoissonStructure& P, const UElement& u, const UElement& v) {
  return EnvelopeAlgebra(P).multiply(u, v);
}

std::optional<long> u_degree(const PoissonStructure& P, const UElement& u) {
  BracketDegree bd = bracket_degree(P);
  long d = bd.effective();
  const Grading& w = *P.grading();
  std::optional<long> found;
  for (const auto& [k, c] : u.terms()) {
    long deg = k.first.weighted_degree(w.weights()) + k.second.weighted_degree(w.weights()) +
               d * static_cast<long>(k.second.total_degree());
    if (found && *found != deg) throw GradingError("element of U(A) is not homogeneous");
    found = deg;
  }
  return found;
}

HilbertReport u_hilbert(const PoissonStructure& P, int N) {
  if (N < 0) throw GradingError("u_hilbert: negative window");
  BracketDegree bd = bracket_degree(P);
  long d = bd.effective();
  if (d < 0) {
    throw GradingError("u_hilbert: bracket degree " + std::to_string(d) +
                       " < 0, so U(A) is not connected N-graded");
  }
  const Grading& w = *P.grading();
  std::vector<long> gen_weights;
  for (int wi : w.weights()) gen_weights.push_back(wi);
  for (int wi : w.weights()) gen_weights.push_back(wi + d);

  HilbertReport rep;
  rep.dims.assign(static_cast<std::size_t>(N) + 1, Integer(0));
  rep.dims[0] = 1;
  for (long g : gen_weights) {
    for (long s = g; s <= N; ++s) rep.dims[s] += rep.dims[s - g];
  }

  // Certify the pole order at t = 1: (1 − t^L)^{2n} H(t) is a polynomial of
  // degree D = Σ (L − w), and no smaller power clears a full period of L
  // trailing coefficients once N ≥ D + L.
  long L = 1;
  long D = 0;
  for (long g : gen_weights) L = std::lcm(L, g);
  for (long g : gen_weights) D += L - g;
  if (N < D + L) {
    rep.note = "window N=" + std::to_string(N) + " too short to certify growth (needs N >= " +
               std::to_string(D + L) + ")";
    return rep;
  }
  std::vector<Integer> s = rep.dims;
  const int max_e = static_cast<int>(gen_weights.size()) + 2;
  for (int e = 0; e <= max_e; ++e) {
    bool tail_zero = true;
    for (long k = N - L + 1; k <= N; ++k) {
      if (s[k] != 0) tail_zero = false;
    }
    if (tail_zero) {
      rep.gk_evidence = e;
      rep.growth_exponent = e - 1;
      break;
    }
    for (long k = N; k >= L; --k) s[k] -= s[k - L];
  }
  return rep;
}

namespace {

class NuMap {
 public:
  NuMap(const EnvelopeAlgebra& U, const Derivation& tau) : U_(U) {
    const std::size_t n = U.nvars();
    for (std::size_t i = 0; i < n; ++i) h_images_.push_back(UElement::h(n, i) + UElement::m(tau.images[i]));
  }

  const UElement& h_image(std::size_t i) const { return h_images_[i]; }

  UElement apply(const UElement& u) const {
    const std::size_t n = U_.nvars();
    UElement out(n);
    for (const auto& [k, c] : u.terms()) {
      UElement t = UElement::basis(k.first, Monomial(n), c);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t e = 0; e < k.second[i]; ++e) t = U_.multiply(t, h_images_[i]);
      }
      out += t;
    }
    return out;
  }

 private:
  const EnvelopeAlgebra& U_;
  std::vector<UElement> h_images_;
};

}  // namespace

NakayamaReport extend_poisson_derivation(const PoissonStructure& P, const Derivation& tau) {
  if (!P.verified()) throw UnverifiedError("extend_poisson_derivation requires a verified Poisson structure");
  if (!check_poisson_derivation(P, tau).passed()) throw StructureError("τ is not a Poisson derivation");
  const std::size_t n = P.nvars();
  const auto& names = P.names();
  EnvelopeAlgebra U(P);
  NuMap nu(U, tau);

  // ν(h_a) = h_a + m_{τ(a)} for every a ∈ A.
  auto nu_h_of = [&](const Poly& a) { return U.expand_h(a) + UElement::m(tau.apply(a)); };

  NakayamaReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    Poly xi = Poly::variable(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Poly xj = Poly::variable(n, j);
      std::string pair = "(" + names[i] + "," + names[j] + ")";
      if (i < j) {
        UElement comm = U.multiply(nu.h_image(i), nu.h_image(j)) - U.multiply(nu.h_image(j), nu.h_image(i));
        if (comm != nu_h_of(P.entry(i, j))) rep.failures.push_back("[h,h] relation " + pair);
      }
      if (i <= j) {
        UElement lhs = U.multiply(UElement::m(xj), nu.h_image(i)) + U.multiply(UElement::m(xi), nu.h_image(j));
        if (lhs != nu_h_of(xi * xj)) rep.failures.push_back("h_{ab} relation " + pair);
      }
      UElement mx = UElement::m(xj);
      UElement comm = U.multiply(nu.h_image(i), mx) - U.multiply(mx, nu.h_image(i));
      if (comm != UElement::m(P.entry(i, j))) rep.failures.push_back("[h,m] relation " + pair);
    }
  }
  // ν applied to normal forms agrees with the defining formula on h_{x_i}.
  for (std::size_t i = 0; i < n; ++i) {
    if (nu.apply(UElement::h(n, i)) != nu.h_image(i)) rep.failures.push_back("generator h_" + names[i]);
  }
  rep.well_defined = rep.failures.empty();
  rep.identity = tau.is_zero();
  return rep;
}

}  // namespace phk

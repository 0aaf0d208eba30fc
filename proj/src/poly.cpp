#include "morava/poly.hpp"

#include <algorithm>
#include <sstream>

namespace morava::fp {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientSpec::CoefficientSpec(std::uint32_t prime, std::uint32_t height) : p(prime), s(height) {
    if (!is_prime(p)) throw InputError("coefficient prime must be prime, got " + std::to_string(p));
    if (p >= (1u << 16)) throw InputError("coefficient prime must fit a half-word");
    if (s < 2) throw InputError("height s must be >= 2, got " + std::to_string(s));
}

std::int64_t CoefficientSpec::v_degree() const {
    std::int64_t ps = 1;
    for (std::uint32_t i = 0; i < s; ++i) ps *= p;
    return -2 * (ps - 1);
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> vars,
                       std::vector<std::int64_t> degrees, MonomialOrder order) {
    if (!is_prime(p)) throw InputError("ring characteristic must be prime, got " + std::to_string(p));
    if (p >= (1u << 16)) throw InputError("ring characteristic must fit a half-word");
    if (vars.size() != degrees.size())
        throw InputError("variable and degree lists differ in length");
    if (vars.size() > max_vars)
        throw SizeLimit("too many variables: " + std::to_string(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable " + vars[i]);
    auto ring = std::shared_ptr<PolyRing>(new PolyRing());
    ring->p_ = p;
    ring->vars_ = std::move(vars);
    ring->degrees_ = std::move(degrees);
    ring->order_ = order;
    return ring;
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

std::uint32_t PolyRing::inv(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_p");
    std::uint32_t result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Monomial Monomial::one(std::size_t nvars) {
    Monomial m;
    m.n = static_cast<std::uint16_t>(nvars);
    return m;
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t exp) {
    Monomial m = one(nvars);
    m.e[i] = static_cast<std::uint16_t>(exp);
    m.total = exp;
    return m;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n != o.n || total != o.total) return false;
    for (std::uint16_t i = 0; i < n; ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t i = 0; i < n; ++i) {
        h ^= e[i];
        h *= 1099511628211ull;
    }
    return h;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.total > b.total) return false;
    for (std::uint16_t i = 0; i < a.n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::uint16_t i = 0; i < a.n; ++i)
        m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    m.total = a.total + b.total;
    return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::uint16_t i = 0; i < a.n; ++i)
        m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    m.total = a.total - b.total;
    return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    std::uint32_t total = 0;
    for (std::uint16_t i = 0; i < a.n; ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        total += m.e[i];
    }
    m.total = total;
    return m;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::grevlex) {
        if (a.total != b.total) return a.total > b.total ? 1 : -1;
        for (int i = a.n - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    for (std::uint16_t i = 0; i < a.n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, std::uint32_t c) {
    Polynomial f(std::move(ring));
    c %= f.ring_->p();
    if (c != 0) f.terms_.push_back({Monomial::one(f.ring_->nvars()), c});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, std::uint32_t exp) {
    Polynomial f(std::move(ring));
    if (exp == 0) return constant(f.ring_, 1);
    f.terms_.push_back({Monomial::var(f.ring_->nvars(), i, exp), 1});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    const MonomialOrder ord = f.ring_->order();
    std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
        return mono_cmp(a.mon, b.mon, ord) > 0;
    });
    for (auto& t : terms) {
        std::uint32_t c = t.coef % f.ring_->p();
        if (!f.terms_.empty() && f.terms_.back().mon == t.mon) {
            f.terms_.back().coef = f.ring_->add(f.terms_.back().coef, c);
            if (f.terms_.back().coef == 0) f.terms_.pop_back();
        } else if (c != 0) {
            f.terms_.push_back({t.mon, c});
        }
    }
    return f;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    f.terms_ = std::move(terms);
    return f;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

namespace {
// merge two descending term lists, combining mod p
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    const MonomialOrder ord = ring.order();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = mono_cmp(a[i].mon, b[j].mon, ord);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            Term t = b[j++];
            if (negate_b) t.coef = ring.neg(t.coef);
            out.push_back(t);
        } else {
            std::uint32_t coef = negate_b ? ring.sub(a[i].coef, b[j].coef)
                                          : ring.add(a[i].coef, b[j].coef);
            if (coef != 0) out.push_back({a[i].mon, coef});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        Term t = b[j];
        if (negate_b) t.coef = ring.neg(t.coef);
        out.push_back(t);
    }
    return out;
}
} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial f(ring_ ? ring_ : o.ring_);
    f.terms_ = merge_terms(*f.ring_, terms_, o.terms_, false);
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial f(ring_ ? ring_ : o.ring_);
    f.terms_ = merge_terms(*f.ring_, terms_, o.terms_, true);
    return f;
}

Polynomial Polynomial::times_term(const Term& t) const {
    Polynomial f(ring_);
    if (t.coef % ring_->p() == 0) return f;
    f.terms_.reserve(terms_.size());
    for (const Term& u : terms_) {
        std::uint32_t c = ring_->mul(u.coef, t.coef);
        if (c != 0) f.terms_.push_back({mono_mul(u.mon, t.mon), c});
    }
    return f;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
    Polynomial acc = Polynomial::zero(ring_ ? ring_ : o.ring_);
    for (const Term& t : small.terms_) acc += big.times_term(t);
    return acc;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    std::uint32_t lc = leading_term().coef;
    if (lc == 1) return *this;
    return times_term({Monomial::one(ring_->nvars()), ring_->inv(lc)});
}

std::int64_t Polynomial::weighted_degree(const Monomial& m) const {
    std::int64_t d = 0;
    for (std::uint16_t i = 0; i < m.n; ++i) d += std::int64_t(m.e[i]) * ring_->degrees()[i];
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = weighted_degree(terms_.front().mon);
    for (const Term& t : terms_)
        if (weighted_degree(t.mon) != d) return false;
    return true;
}

std::optional<std::int64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return weighted_degree(terms_.front().mon);
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& bindings,
                                  std::vector<std::string>* warnings) const {
    if (warnings) {
        for (const auto& [var, value] : bindings) {
            auto d = value.homogeneous_degree();
            if (value.is_zero()) continue;
            if (!d || *d != ring_->degrees()[var])
                warnings->push_back("binding for " + ring_->var_name(var) +
                                    " does not match its declared degree " +
                                    std::to_string(ring_->degrees()[var]));
        }
    }
    Polynomial acc = Polynomial::zero(ring_);
    for (const Term& t : terms_) {
        Monomial rest = Monomial::one(ring_->nvars());
        Polynomial piece = Polynomial::constant(ring_, t.coef);
        for (std::uint16_t i = 0; i < t.mon.n; ++i) {
            if (t.mon.e[i] == 0) continue;
            auto it = bindings.find(i);
            if (it == bindings.end()) {
                rest.e[i] = t.mon.e[i];
                rest.total += t.mon.e[i];
            } else {
                piece = piece * it->second.pow(t.mon.e[i]);
            }
        }
        acc += piece.times_term({rest, 1});
    }
    return acc;
}

Polynomial Polynomial::specialize(std::size_t var, std::uint32_t value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    value %= ring_->p();
    for (const Term& t : terms_) {
        Term u = t;
        if (u.mon.e[var] != 0) {
            std::uint32_t scale = 1;
            for (std::uint16_t k = 0; k < u.mon.e[var]; ++k) scale = ring_->mul(scale, value);
            u.coef = ring_->mul(u.coef, scale);
            u.mon.total -= u.mon.e[var];
            u.mon.e[var] = 0;
        }
        if (u.coef != 0) out.push_back(u);
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::change_ring(const RingPtr& target) const {
    std::vector<int> map(ring_->nvars(), -1);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
        map[i] = target->var_index(ring_->var_name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = Monomial::one(target->nvars());
        for (std::uint16_t i = 0; i < t.mon.n; ++i) {
            if (t.mon.e[i] == 0) continue;
            if (map[i] < 0)
                throw UnknownName("variable " + ring_->var_name(i) + " absent from target ring");
            m.e[map[i]] = t.mon.e[i];
            m.total += t.mon.e[i];
        }
        out.push_back({m, t.coef % target->p()});
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (t.coef != 1 || t.mon.is_one()) {
            os << t.coef;
            printed = true;
        }
        for (std::uint16_t i = 0; i < t.mon.n; ++i) {
            if (t.mon.e[i] == 0) continue;
            if (printed) os << '*';
            os << ring_->var_name(i);
            if (t.mon.e[i] > 1) os << '^' << t.mon.e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace morava::fp

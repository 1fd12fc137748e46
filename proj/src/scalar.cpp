#include "cqg/scalar.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace cqg {

namespace {

struct LaurentTerms {
    long shift = 0;
    IntPoly poly;
};

void append_terms(std::ostringstream& os, long shift, const IntPoly& p) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& c = p[i];
        if (c == 0) continue;
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        mpz_class a = abs(c);
        os << a.get_str() << "*v^" << (shift + i);
        first = false;
    }
}

LaurentTerms parse_laurent(std::string_view s) {
    std::vector<std::pair<long, mpz_class>> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&](std::string& out) {
        std::size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) throw std::invalid_argument("Scalar::parse: expected digits in '" + std::string(s) + "'");
        out.assign(s.substr(st, i - st));
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("Scalar::parse: empty polynomial");
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        std::string digits;
        read_int(digits);
        mpz_class c(digits);
        long e = 0;
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
            if (i >= s.size() || s[i] != 'v') throw std::invalid_argument("Scalar::parse: expected 'v'");
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    if (s[i] == '-') esign = -1;
                    ++i;
                }
                std::string ed;
                read_int(ed);
                e = esign * std::stol(ed);
            }
        }
        terms.emplace_back(e, sign * c);
    }
    LaurentTerms out;
    if (terms.empty()) return out;
    long lo = terms.front().first;
    long hi = lo;
    for (auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] += c;
    out.shift = lo;
    out.poly = IntPoly(std::move(coeffs));
    return out;
}

}  // namespace

Scalar::Scalar() : den_(IntPoly::constant(1)) {}

Scalar::Scalar(long n) : num_(IntPoly::constant(n)), den_(IntPoly::constant(1)) {}

Scalar::Scalar(const Rational& r) {
    *this = normalized(0, IntPoly::constant(r.get_num()), IntPoly::constant(r.get_den()));
}

Scalar Scalar::v_power(long k) {
    Scalar s;
    s.shift_ = k;
    s.num_ = IntPoly::constant(1);
    return s;
}

Scalar Scalar::fraction(long shift, IntPoly num, IntPoly den) {
    return normalized(shift, std::move(num), std::move(den));
}

Scalar Scalar::normalized(long shift, IntPoly num, IntPoly den) {
    if (den.is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar s;
    if (num.is_zero()) return s;
    if (int k = num.low_order()) {
        num = num.shifted_down(k);
        shift += k;
    }
    if (int k = den.low_order()) {
        den = den.shifted_down(k);
        shift -= k;
    }
    if (num.degree() > 0 && den.degree() > 0) {
        IntPoly g = primitive_gcd(num, den);
        if (g.degree() > 0) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    mpz_class c = num.content();
    mpz_class cd = den.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (den.lead() < 0) c = -c;
    if (c != 1) {
        num.divide_content(c);
        den.divide_content(c);
    }
    s.shift_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

bool Scalar::is_one() const {
    return shift_ == 0 && num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_.negate();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s;
    s.shift_ = -shift_;
    s.num_ = den_;
    s.den_ = num_;
    if (s.den_.lead() < 0) {
        s.num_.negate();
        s.den_.negate();
    }
    return s;
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long m = std::min(a.shift_, b.shift_);
    if (a.den_ == b.den_) {
        IntPoly n = a.num_.shifted_up(static_cast<int>(a.shift_ - m)) + b.num_.shifted_up(static_cast<int>(b.shift_ - m));
        return Scalar::normalized(m, std::move(n), a.den_);
    }
    IntPoly n = a.num_.shifted_up(static_cast<int>(a.shift_ - m)) * b.den_ +
                b.num_.shifted_up(static_cast<int>(b.shift_ - m)) * a.den_;
    return Scalar::normalized(m, std::move(n), a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.degree() == 0 && b.den_.degree() == 0)
        return Scalar::normalized(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
    IntPoly na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
    if (na.degree() > 0 && db.degree() > 0) {
        IntPoly g = primitive_gcd(na, db);
        if (g.degree() > 0) {
            na = divide_exact(na, g);
            db = divide_exact(db, g);
        }
    }
    if (nb.degree() > 0 && da.degree() > 0) {
        IntPoly g = primitive_gcd(nb, da);
        if (g.degree() > 0) {
            nb = divide_exact(nb, g);
            da = divide_exact(da, g);
        }
    }
    return Scalar::normalized(a.shift_ + b.shift_, na * nb, da * db);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::str() const {
    std::ostringstream os;
    append_terms(os, shift_, num_);
    os << "/";
    append_terms(os, 0, den_);
    return os.str();
}

Scalar Scalar::parse(std::string_view text) {
    auto slash = text.find('/');
    LaurentTerms n = parse_laurent(text.substr(0, slash));
    if (slash == std::string_view::npos) return normalized(n.shift, std::move(n.poly), IntPoly::constant(1));
    LaurentTerms d = parse_laurent(text.substr(slash + 1));
    if (d.poly.is_zero()) throw std::invalid_argument("Scalar::parse: zero denominator");
    return normalized(n.shift - d.shift, std::move(n.poly), std::move(d.poly));
}

namespace {

// Σ c_i v^{shift+i} written in q = v^L; empty if some exponent is not a multiple of L
std::optional<std::string> q_terms(long shift, const IntPoly& p, int L, int* count) {
    std::ostringstream os;
    bool first = true;
    *count = 0;
    for (int i = p.degree(); i >= 0; --i) {
        mpz_class c = p[i];
        if (c == 0) continue;
        if ((shift + i) % L != 0) return std::nullopt;
        const long e = (shift + i) / L;
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        c = abs(c);
        const bool unit = (c == 1);
        if (!unit || e == 0) os << c.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
        ++*count;
    }
    return os.str();
}

}  // namespace

std::string Scalar::pretty(int L) const {
    if (is_zero()) return "0";
    int nn = 0, nd = 0;
    const auto num = q_terms(shift_, num_, L, &nn);
    const auto den = q_terms(0, den_, L, &nd);
    if (!num || !den) return str();
    if (*den == "1") return *num;
    return (nn > 1 ? "(" + *num + ")" : *num) + "/" + (nd > 1 ? "(" + *den + ")" : *den);
}

std::size_t Scalar::hash() const {
    std::size_t h = std::hash<long>{}(shift_);
    auto mix = [&h](unsigned long x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& c : num_.coeffs()) mix(mpz_get_ui(c.get_mpz_t()) ^ (c < 0 ? 1UL : 0UL));
    mix(0xabcdefUL);
    for (const auto& c : den_.coeffs()) mix(mpz_get_ui(c.get_mpz_t()));
    return h;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar q_power(const Rational& e, int L) {
    Rational x = e * L;
    x.canonicalize();
    if (x.get_den() != 1)
        throw ExponentError("q-exponent " + e.get_str() + " is not representable with L = " + std::to_string(L));
    return Scalar::v_power(x.get_num().get_si());
}

Scalar qnum(const Rational& z, int L) {
    Scalar qz = q_power(z, L);
    if (qz.is_one()) return Scalar();
    Scalar q = Scalar::v_power(L);
    return (qz - qz.inverse()) / (q - q.inverse());
}

Scalar qnum_base(long n, long d, int L) {
    if (n == 0) return Scalar();
    Scalar x = Scalar::v_power(static_cast<long>(L) * d * n);
    Scalar b = Scalar::v_power(static_cast<long>(L) * d);
    return (x - x.inverse()) / (b - b.inverse());
}

Scalar qbinomial_base(long n, long k, long d, int L) {
    if (k < 0 || k > n) return Scalar();
    Scalar r(1);
    for (long j = 1; j <= k; ++j) r = r * qnum_base(n - k + j, d, L) / qnum_base(j, d, L);
    return r;
}

}  // namespace cqg

#include "weiltate/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weiltate/error.hpp"

namespace weiltate {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

Integer IntPoly::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::scale_variable(const Integer& s) const {
    std::vector<Integer> out(coeffs_.size());
    Integer power = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] = coeffs_[i] * power;
        power *= s;
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reciprocal() const {
    std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (coeffs_.back() < 0) g = -g;
    IntPoly r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result = IntPoly{1};
    IntPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

DivRem divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by the zero polynomial");
    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const Integer& lb = b.leading();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
    Integer q;
    for (long i = a.degree(); i >= db; --i) {
        Integer& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) break;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        const auto shift = static_cast<std::size_t>(i - db);
        quot[shift] = q;
        for (long j = 0; j <= db; ++j)
            mpz_submul(rem[shift + static_cast<std::size_t>(j)].get_mpz_t(), q.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

namespace {

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    const long db = b.degree();
    const Integer& lb = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const Integer top = rem[static_cast<std::size_t>(i)];
        for (auto& c : rem) c *= lb;
        if (top == 0) continue;
        const auto shift = static_cast<std::size_t>(i - db);
        for (long j = 0; j <= db; ++j)
            mpz_submul(rem[shift + static_cast<std::size_t>(j)].get_mpz_t(), top.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    return IntPoly(std::move(rem));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
    // With p = prod a_i^i: g = prod a_i^(i-1) and w = prod a_i. Each round
    // peels off the factors of lowest multiplicity. Every divisor is
    // primitive, so by Gauss's lemma all quotients stay in Z[T].
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    const IntPoly p = f.primitive_part();
    IntPoly g = gcd(p, p.derivative());
    IntPoly w = divide_exact(p, g);
    for (unsigned i = 1; w.degree() > 0; ++i) {
        IntPoly y = gcd(w, g);
        IntPoly a = divide_exact(w, y);
        if (a.degree() > 0) out.emplace_back(a.primitive_part(), i);
        g = divide_exact(g, y);
        w = std::move(y);
    }
    return out;
}

IntPoly parse_poly(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    auto trim = [&](std::string_view s) {
        while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
        while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return {};
    std::vector<Integer> coeffs;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (field.empty()) fail(ErrorKind::Parse, "empty coefficient in polynomial text");
        if (field.front() == '+') fail(ErrorKind::Parse, "leading '+' is not allowed in polynomial text");
        std::size_t start = field.front() == '-' ? 1 : 0;
        if (start == field.size()) fail(ErrorKind::Parse, "dangling '-' in polynomial text");
        for (std::size_t i = start; i < field.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(field[i])))
                fail(ErrorKind::Parse, "invalid coefficient '" + std::string(field) + "'");
        coeffs.emplace_back(std::string(field), 10);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += f.coeffs()[i].get_str();
    }
    return out;
}

std::string pretty_poly(const IntPoly& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace weiltate

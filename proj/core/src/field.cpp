#include "imagcone/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace imagcone {

namespace {

bool is_squarefree(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

} // namespace

Field::Field() : data_(std::make_shared<Data>()) {}

Field::Field(std::vector<long> radicands) {
    std::sort(radicands.begin(), radicands.end());
    for (std::size_t i = 0; i < radicands.size(); ++i) {
        if (!is_squarefree(radicands[i]))
            throw InvalidFieldSpec("radicand " + std::to_string(radicands[i]) +
                                   " is not a squarefree integer > 1");
        if (i > 0 && radicands[i] == radicands[i - 1])
            throw InvalidFieldSpec("duplicate radicand " + std::to_string(radicands[i]));
    }
    if (radicands.size() > 20)
        throw InvalidFieldSpec("too many radicands");
    // Multiplicative independence: no nonempty subset product may be a square,
    // otherwise the 2^k basis is degenerate and canonical forms break.
    const std::size_t n = radicands.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        mpz_class prod(1);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) prod *= radicands[i];
        if (mpz_perfect_square_p(prod.get_mpz_t()))
            throw InvalidFieldSpec("radicands are multiplicatively dependent (subset product " +
                                   prod.get_str() + " is a perfect square)");
    }
    auto data = std::make_shared<Data>();
    data->radicands = std::move(radicands);
    data_ = std::move(data);
}

mpz_class Field::basis_product(std::size_t mask) const {
    mpz_class prod(1);
    for (std::size_t i = 0; i < rank(); ++i)
        if (mask & (std::size_t(1) << i)) prod *= data_->radicands[i];
    return prod;
}

bool Field::has_radicand(long d) const {
    return std::binary_search(data_->radicands.begin(), data_->radicands.end(), d);
}

std::size_t Field::radicand_index(long d) const {
    auto it = std::lower_bound(data_->radicands.begin(), data_->radicands.end(), d);
    if (it == data_->radicands.end() || *it != d)
        throw FieldMismatch("radicand " + std::to_string(d) + " not in field");
    return std::size_t(it - data_->radicands.begin());
}

bool Field::operator==(const Field& other) const {
    return data_ == other.data_ || data_->radicands == other.data_->radicands;
}

bool Field::subfield_of(const Field& other) const {
    return std::includes(other.data_->radicands.begin(), other.data_->radicands.end(),
                         data_->radicands.begin(), data_->radicands.end());
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Field& f, mpq_class rational) : field_(f), coeffs_(f.basis_size(), mpq_class(0)) {
    rational.canonicalize();
    coeffs_[0] = std::move(rational);
}

Scalar::Scalar(const Field& f, long num, long den) : Scalar(f, mpq_class(num, den)) {}

Scalar Scalar::basis_element(const Field& f, std::size_t mask) {
    if (mask >= f.basis_size()) throw FieldMismatch("basis mask out of range");
    Scalar s(f);
    s.coeffs_[mask] = 1;
    return s;
}

Scalar Scalar::sqrt_of(const Field& f, long radicand) {
    return basis_element(f, std::size_t(1) << f.radicand_index(radicand));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<mpq_class>;

// result += a * b over the basis of the first 2^k subsets.
void mul_acc(Coeffs& result, const Coeffs& a, const Coeffs& b, std::size_t k,
             const std::vector<long>& radicands) {
    const std::size_t n = std::size_t(1) << k;
    for (std::size_t s = 0; s < n; ++s) {
        if (a[s] == 0) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (b[t] == 0) continue;
            mpz_class factor(1);
            std::size_t common = s & t;
            for (std::size_t i = 0; i < k; ++i)
                if (common & (std::size_t(1) << i)) factor *= radicands[i];
            result[s ^ t] += a[s] * b[t] * mpq_class(factor);
        }
    }
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::size_t k, const std::vector<long>& radicands) {
    Coeffs out(std::size_t(1) << k, mpq_class(0));
    mul_acc(out, a, b, k, radicands);
    return out;
}

bool all_zero(const Coeffs& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

int sign_rec(const Coeffs& x, std::size_t k, const std::vector<long>& radicands) {
    if (k == 0) return sgn(x[0]);
    const std::size_t half = std::size_t(1) << (k - 1);
    Coeffs a(x.begin(), x.begin() + half);
    Coeffs b(x.begin() + half, x.end());
    const int sa = sign_rec(a, k - 1, radicands);
    const int sb = sign_rec(b, k - 1, radicands);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // x = a + b*sqrt(d) with sign(a) = -sign(b): compare a^2 against b^2*d.
    Coeffs t = mul(a, a, k - 1, radicands);
    Coeffs b2 = mul(b, b, k - 1, radicands);
    const mpq_class d(radicands[k - 1]);
    for (std::size_t i = 0; i < half; ++i) t[i] -= b2[i] * d;
    const int st = sign_rec(t, k - 1, radicands);
    if (st == 0)
        throw AlgorithmInvariantViolated("a^2 = d*b^2 in a multiplicatively independent field");
    return sa * st;
}

Coeffs inv_rec(const Coeffs& x, std::size_t k, const std::vector<long>& radicands) {
    if (k == 0) {
        if (x[0] == 0) throw DivisionByZero();
        return {mpq_class(1) / x[0]};
    }
    const std::size_t half = std::size_t(1) << (k - 1);
    Coeffs a(x.begin(), x.begin() + half);
    Coeffs b(x.begin() + half, x.end());
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2)
    Coeffs den = mul(a, a, k - 1, radicands);
    Coeffs b2 = mul(b, b, k - 1, radicands);
    const mpq_class d(radicands[k - 1]);
    for (std::size_t i = 0; i < half; ++i) den[i] -= b2[i] * d;
    if (all_zero(den)) throw DivisionByZero();
    Coeffs deninv = inv_rec(den, k - 1, radicands);
    Coeffs lo = mul(a, deninv, k - 1, radicands);
    Coeffs hi = mul(b, deninv, k - 1, radicands);
    Coeffs out(std::size_t(1) << k, mpq_class(0));
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = lo[i];
        out[half + i] = -hi[i];
    }
    return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<Coeffs> sqrt_rec(const Coeffs& x, std::size_t k, const std::vector<long>& radicands) {
    if (k == 0) {
        auto r = rational_sqrt(x[0]);
        if (!r) return std::nullopt;
        return Coeffs{*r};
    }
    const std::size_t half = std::size_t(1) << (k - 1);
    Coeffs a(x.begin(), x.begin() + half);
    Coeffs b(x.begin() + half, x.end());
    const mpq_class d(radicands[k - 1]);
    auto assemble = [&](const Coeffs& lo, const Coeffs& hi) {
        Coeffs out(std::size_t(1) << k, mpq_class(0));
        for (std::size_t i = 0; i < half; ++i) {
            out[i] = lo[i];
            out[half + i] = hi[i];
        }
        return out;
    };
    if (all_zero(b)) {
        if (auto r = sqrt_rec(a, k - 1, radicands))
            return assemble(*r, Coeffs(half, mpq_class(0)));
        Coeffs ad = a;
        for (auto& c : ad) c /= d;
        if (auto r = sqrt_rec(ad, k - 1, radicands))
            return assemble(Coeffs(half, mpq_class(0)), *r);
        return std::nullopt;
    }
    // x = a + b sqrt(d), b != 0: a root x0 + y0 sqrt(d) needs
    // x0^2 = (a ± sqrt(a^2 - d b^2))/2 and y0 = b/(2 x0).
    Coeffs disc = mul(a, a, k - 1, radicands);
    Coeffs b2 = mul(b, b, k - 1, radicands);
    for (std::size_t i = 0; i < half; ++i) disc[i] -= b2[i] * d;
    auto r = sqrt_rec(disc, k - 1, radicands);
    if (!r) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Coeffs xsq = a;
        for (std::size_t i = 0; i < half; ++i) {
            xsq[i] += (branch == 0 ? (*r)[i] : -(*r)[i]);
            xsq[i] /= 2;
        }
        auto x0 = sqrt_rec(xsq, k - 1, radicands);
        if (!x0 || all_zero(*x0)) continue;
        Coeffs twox = *x0;
        for (auto& c : twox) c *= 2;
        Coeffs y0 = mul(b, inv_rec(twox, k - 1, radicands), k - 1, radicands);
        Coeffs cand = assemble(*x0, y0);
        Coeffs sq = mul(cand, cand, k, radicands);
        bool ok = true;
        for (std::size_t i = 0; i < sq.size(); ++i)
            if (sq[i] != x[i]) { ok = false; break; }
        if (ok) return cand;
    }
    return std::nullopt;
}

} // namespace

int Scalar::sign() const { return sign_rec(coeffs_, field_.rank(), field_.radicands()); }

Scalar Scalar::operator-() const {
    Scalar out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

void Scalar::ensure_same_field(const Scalar& rhs, Scalar& a, Scalar& b) const {
    if (field_ == rhs.field_) {
        a = *this;
        b = rhs;
        return;
    }
    if (field_.subfield_of(rhs.field_)) {
        a = lifted_to(rhs.field_);
        b = rhs;
        return;
    }
    if (rhs.field_.subfield_of(field_)) {
        a = *this;
        b = rhs.lifted_to(field_);
        return;
    }
    throw FieldMismatch("scalars over incompatible fields");
}

Scalar Scalar::lifted_to(const Field& f) const {
    if (field_ == f) return *this;
    if (!field_.subfield_of(f)) throw FieldMismatch("not a subfield");
    Scalar out(f);
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (coeffs_[mask] == 0) continue;
        std::size_t lifted_mask = 0;
        for (std::size_t i = 0; i < field_.rank(); ++i)
            if (mask & (std::size_t(1) << i))
                lifted_mask |= std::size_t(1) << f.radicand_index(field_.radicands()[i]);
        out.coeffs_[lifted_mask] = coeffs_[mask];
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    Scalar a, b;
    ensure_same_field(rhs, a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    *this = std::move(a);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    Scalar a, b;
    ensure_same_field(rhs, a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    *this = std::move(a);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    Scalar a, b;
    ensure_same_field(rhs, a, b);
    a.coeffs_ = mul(a.coeffs_, b.coeffs_, a.field_.rank(), a.field_.radicands());
    *this = std::move(a);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    Scalar a, b;
    ensure_same_field(rhs, a, b);
    if (b.is_zero()) throw DivisionByZero();
    Coeffs inv = inv_rec(b.coeffs_, b.field_.rank(), b.field_.radicands());
    a.coeffs_ = mul(a.coeffs_, inv, a.field_.rank(), a.field_.radicands());
    *this = std::move(a);
    return *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
    Scalar a, b;
    ensure_same_field(rhs, a, b);
    return a.coeffs_ == b.coeffs_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar out(field_);
    out.coeffs_ = inv_rec(coeffs_, field_.rank(), field_.radicands());
    return out;
}

std::optional<Scalar> Scalar::try_sqrt() const {
    if (sign() < 0) throw NegativeRadicand("try_sqrt of a negative scalar");
    auto r = sqrt_rec(coeffs_, field_.rank(), field_.radicands());
    if (!r) return std::nullopt;
    Scalar out(field_);
    out.coeffs_ = std::move(*r);
    if (out.sign() < 0) out = -out;
    return out;
}

double Scalar::to_double() const {
    double acc = 0;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        if (coeffs_[mask] == 0) continue;
        acc += coeffs_[mask].get_d() *
               std::sqrt(mpq_class(field_.basis_product(mask)).get_d());
    }
    return acc;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
        const mpq_class& c = coeffs_[mask];
        if (c == 0) continue;
        mpq_class abs_c = abs(c);
        if (!first)
            os << (c < 0 ? "-" : "+");
        else if (c < 0)
            os << "-";
        first = false;
        if (mask == 0) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << "*";
            os << "sqrt" << basis_product_str(mask);
        }
    }
    return os.str();
}

std::string Scalar::basis_product_str(std::size_t mask) const {
    return field_.basis_product(mask).get_str();
}

int Scalar::compare_lex(const Scalar& a, const Scalar& b) {
    Scalar x, y;
    a.ensure_same_field(b, x, y);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------------

Scalar coxeter_cosine(const Field& f, int m) {
    switch (m) {
    case 2:
        return Scalar(f, 0, 1);
    case 3:
        return Scalar(f, -1, 2);
    case 4:
        if (!f.has_radicand(2)) throw UnrepresentableLabel("label 4 needs sqrt2 in the field");
        return Scalar(f, -1, 2) * Scalar::sqrt_of(f, 2);
    case 5:
        if (!f.has_radicand(5)) throw UnrepresentableLabel("label 5 needs sqrt5 in the field");
        return Scalar(f, -1, 4) * (Scalar(f, 1, 1) + Scalar::sqrt_of(f, 5));
    case 6:
        if (!f.has_radicand(3)) throw UnrepresentableLabel("label 6 needs sqrt3 in the field");
        return Scalar(f, -1, 2) * Scalar::sqrt_of(f, 3);
    case 12:
        if (!f.has_radicand(2) || !f.has_radicand(3))
            throw UnrepresentableLabel("label 12 needs sqrt2 and sqrt3 in the field");
        return Scalar(f, -1, 4) *
               (Scalar::sqrt_of(f, 2) * Scalar::sqrt_of(f, 3) + Scalar::sqrt_of(f, 2));
    default:
        throw UnrepresentableLabel("label " + std::to_string(m) +
                                   " has no multi-quadratic cosine");
    }
}

Scalar infinite_bond(const Scalar& c) {
    if ((c + Scalar(c.field(), 1, 1)).sign() > 0)
        throw InvalidInfiniteBond("infinite bond parameter must be <= -1");
    return c;
}

std::optional<int> label_of_gram_entry(const Scalar& value) {
    const int s = value.sign();
    if (s > 0) return std::nullopt;
    if ((value + Scalar(value.field(), 1, 1)).sign() <= 0) return 0; // infinite bond
    for (int m : {2, 3, 4, 5, 6, 12}) {
        try {
            if (value == coxeter_cosine(value.field(), m)) return m;
        } catch (const UnrepresentableLabel&) {
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// "a/b", "a/b*sqrtD", "sqrtD", sums/differences thereof.

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw InputError("expected number in scalar '" + s + "'");
        return s.substr(start, pos - start);
    }
    bool at_sqrt() {
        skip_ws();
        return s.compare(pos, 4, "sqrt") == 0;
    }
};

} // namespace

Scalar parse_scalar(const Field& f, const std::string& text) {
    Parser p{text};
    Scalar total(f);
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) {
            if (first) throw InputError("empty scalar string");
            break;
        }
        int sign = 1;
        if (p.eat('+')) {
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw InputError("expected '+' or '-' in scalar '" + text + "'");
        }
        first = false;
        mpq_class coeff(1);
        bool have_coeff = false;
        if (!p.at_sqrt()) {
            std::string num = p.number();
            std::string den = "1";
            if (p.eat('/')) den = p.number();
            coeff = mpq_class(num + "/" + den);
            coeff.canonicalize();
            have_coeff = true;
        }
        Scalar term(f, coeff * sign);
        if ((have_coeff && p.eat('*')) || (!have_coeff)) {
            if (!p.at_sqrt()) {
                if (!have_coeff) throw InputError("bad scalar term in '" + text + "'");
            } else {
                p.pos += 4;
                const std::string d = p.number();
                mpz_class dz(d);
                // The subset product may be composite (e.g. sqrt6 over {2,3});
                // find the unique basis mask with that product.
                bool found = false;
                for (std::size_t mask = 1; mask < f.basis_size(); ++mask) {
                    if (f.basis_product(mask) == dz) {
                        term = term * Scalar::basis_element(f, mask);
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw InputError("sqrt" + d + " not representable over this field");
            }
        }
        total += term;
    }
    return total;
}

} // namespace imagcone

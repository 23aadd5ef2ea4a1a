#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "imagcone/errors.hpp"

namespace imagcone {

/// A real multi-quadratic field Q(sqrt(d_1),...,sqrt(d_k)).
///
/// The radicands d_i are distinct squarefree integers > 1 and multiplicatively
/// independent modulo squares, so the 2^k products of subsets of the sqrt(d_i)
/// form a Q-basis and every element has a unique coefficient vector.
class Field {
public:
    Field();                                   // the rationals
    explicit Field(std::vector<long> radicands);

    std::size_t rank() const { return data_->radicands.size(); }
    std::size_t basis_size() const { return std::size_t(1) << rank(); }
    const std::vector<long>& radicands() const { return data_->radicands; }

    /// Product of the radicands selected by `mask` (1 for the empty subset).
    mpz_class basis_product(std::size_t mask) const;

    bool has_radicand(long d) const;
    std::size_t radicand_index(long d) const;  // throws if absent

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// True if every radicand of this field occurs in `other`.
    bool subfield_of(const Field& other) const;

private:
    struct Data {
        std::vector<long> radicands;
    };
    std::shared_ptr<const Data> data_;
};

/// An element of a multi-quadratic field, kept in canonical form:
/// one mpq coefficient (lowest terms) per basis subset.
class Scalar {
public:
    Scalar() : field_(), coeffs_(1, mpq_class(0)) {}
    explicit Scalar(const Field& f) : field_(f), coeffs_(f.basis_size(), mpq_class(0)) {}
    Scalar(const Field& f, mpq_class rational);
    Scalar(long value) : Scalar(Field(), mpq_class(value)) {}
    Scalar(const Field& f, long num, long den);

    static Scalar rational(mpq_class q) { return Scalar(Field(), std::move(q)); }
    /// sqrt of the subset product selected by mask, as a field element.
    static Scalar basis_element(const Field& f, std::size_t mask);
    static Scalar sqrt_of(const Field& f, long radicand); // single sqrt(d)

    const Field& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    const mpq_class& rational_part() const { return coeffs_[0]; }

    /// Exact sign of the real embedding (all square roots positive): -1, 0, +1.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
    bool operator<(const Scalar& rhs) const { return (*this - rhs).sign() < 0; }
    bool operator<=(const Scalar& rhs) const { return (*this - rhs).sign() <= 0; }
    bool operator>(const Scalar& rhs) const { return (*this - rhs).sign() > 0; }
    bool operator>=(const Scalar& rhs) const { return (*this - rhs).sign() >= 0; }

    Scalar inverse() const;                 // throws DivisionByZero
    std::optional<Scalar> try_sqrt() const; // throws NegativeRadicand if sign < 0

    /// Re-express over a larger field; throws FieldMismatch if not a subfield.
    Scalar lifted_to(const Field& f) const;

    double to_double() const;

    /// Exact human-readable form, e.g. "3/4", "1/4+1/4*sqrt5", "-sqrt2".
    std::string str() const;

    /// Total order usable for deterministic container ordering; finer than
    /// numeric comparison (distinct representations never tie).
    static int compare_lex(const Scalar& a, const Scalar& b);

private:
    void ensure_same_field(const Scalar& rhs, Scalar& lifted_this, Scalar& lifted_rhs) const;
    std::string basis_product_str(std::size_t mask) const;

    Field field_;
    std::vector<mpq_class> coeffs_; // index = subset mask over radicands
};

enum class BondLabel : int { M2 = 2, M3 = 3, M4 = 4, M5 = 5, M6 = 6, M12 = 12 };

/// -cos(pi/m) for a finite Coxeter label, exact over the given field.
/// Supported finite labels: 2, 3, 4, 5, 6, 12 (those with multi-quadratic
/// cosine). Throws UnrepresentableLabel when the cosine does not lie in `f`
/// or the label is not supported.
Scalar coxeter_cosine(const Field& f, int m);

/// Infinite bond with parameter c <= -1 (throws InvalidInfiniteBond otherwise).
Scalar infinite_bond(const Scalar& c);

/// The finite label m with gram value = -cos(pi/m), if any (0 means "value is
/// <= -1", i.e. an infinite bond; nullopt means the value is not permitted by
/// the based-root-system axioms).
std::optional<int> label_of_gram_entry(const Scalar& value);

/// Parse "p/q", "p", "a+b*sqrtD" style exact scalar strings over `f`.
Scalar parse_scalar(const Field& f, const std::string& text);

} // namespace imagcone

#ifndef RAMSEYPACK_FIELD_HPP
#define RAMSEYPACK_FIELD_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace ramseypack {

bool is_prime(long long q); // deterministic trial division

/// Arithmetic in F_q for prime q. Construction verifies primality.
class PrimeField {
public:
    explicit PrimeField(long long q);

    long long order() const { return q_; }

    long long add(long long a, long long b) const { return (a + b) % q_; }
    long long sub(long long a, long long b) const { return (a % q_ - b % q_ + q_) % q_; }
    long long mul(long long a, long long b) const { return (a % q_) * (b % q_) % q_; }
    long long neg(long long a) const { return (q_ - a % q_) % q_; }
    long long pow(long long a, long long e) const;
    long long inv(long long a) const; // a != 0

private:
    long long q_;
};

/// Point of F_q^3 with coordinates reduced mod q.
struct FieldPoint {
    long long x = 0, y = 0, z = 0;

    friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

// Bijection F_q^3 <-> [0, q^3): x*q^2 + y*q + z.
long long point_index(const FieldPoint& p, long long q);
FieldPoint point_from_index(long long idx, long long q);

/// Moment-curve slope (1, lambda*alpha, lambda*alpha^2), lambda and alpha
/// nonzero.
struct Slope {
    long long lambda = 0;
    long long alpha = 0;
    std::array<long long, 3> vector{};

    friend bool operator==(const Slope&, const Slope&) = default;
};

/// Line {beta*slope + base}: the slope's x-component is 1, so the line meets
/// the plane x = 0 exactly once; that point is the canonical base.
struct AffineLine {
    Slope slope;
    FieldPoint base; // base.x == 0

    std::vector<FieldPoint> points(const PrimeField& f) const;
    FieldPoint point_at(long long beta, const PrimeField& f) const;
};

/// Smallest prime >= k^2 r; always at most 2 k^2 r (asserted).
long long least_admissible_prime(int k, int r);

/// The q-1 slopes {(1, lambda*alpha, lambda*alpha^2) : alpha != 0}.
std::vector<Slope> moment_curve(const PrimeField& f, long long lambda);

struct SlopeTripleCheck {
    bool independent = false;  // always true for valid inputs
    long long det_cofactor = 0;
    long long det_closed_form = 0;
};

/// Computes the 3x3 determinant of three equal-lambda slopes two ways
/// (cofactor expansion and lambda^2 * prod of alpha differences) and checks
/// they agree and are nonzero. Distinct alphas required.
SlopeTripleCheck slope_triple_independent(const PrimeField& f, const Slope& s1,
                                          const Slope& s2, const Slope& s3);

/// The family L_lambda: one canonical line per (slope in M_lambda, base in
/// {0} x F_q^2); exactly q^2 (q-1) lines.
std::vector<AffineLine> lines_for(const PrimeField& f, long long lambda);

/// Intersection point of two lines, if any (lines in these families are
/// never equal unless slope and base coincide).
bool lines_intersect(const PrimeField& f, const AffineLine& a, const AffineLine& b,
                     FieldPoint* where = nullptr);

} // namespace ramseypack

#endif

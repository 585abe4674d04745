#include "ramseypack/field.hpp"

#include <cassert>
#include <stdexcept>

namespace ramseypack {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

PrimeField::PrimeField(long long q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: order is not prime");
}

long long PrimeField::pow(long long a, long long e) const {
    a %= q_;
    long long acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * a % q_;
        a = a * a % q_;
        e >>= 1;
    }
    return acc;
}

long long PrimeField::inv(long long a) const {
    a %= q_;
    if (a == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
    return pow(a, q_ - 2);
}

long long point_index(const FieldPoint& p, long long q) {
    return p.x * q * q + p.y * q + p.z;
}

FieldPoint point_from_index(long long idx, long long q) {
    return FieldPoint{idx / (q * q), idx / q % q, idx % q};
}

FieldPoint AffineLine::point_at(long long beta, const PrimeField& f) const {
    return FieldPoint{f.add(f.mul(beta, slope.vector[0]), base.x),
                      f.add(f.mul(beta, slope.vector[1]), base.y),
                      f.add(f.mul(beta, slope.vector[2]), base.z)};
}

std::vector<FieldPoint> AffineLine::points(const PrimeField& f) const {
    std::vector<FieldPoint> out;
    out.reserve(size_t(f.order()));
    for (long long beta = 0; beta < f.order(); ++beta) out.push_back(point_at(beta, f));
    return out;
}

long long least_admissible_prime(int k, int r) {
    if (k < 3 || r < 3)
        throw std::invalid_argument("least_admissible_prime: needs k, r >= 3");
    long long lo = (long long)k * k * r;
    long long q = lo;
    while (!is_prime(q)) ++q;
    assert(q <= 2 * lo); // Bertrand
    return q;
}

std::vector<Slope> moment_curve(const PrimeField& f, long long lambda) {
    if (lambda % f.order() == 0)
        throw std::invalid_argument("moment_curve: lambda must be nonzero");
    lambda %= f.order();
    std::vector<Slope> out;
    out.reserve(size_t(f.order() - 1));
    for (long long alpha = 1; alpha < f.order(); ++alpha) {
        Slope s;
        s.lambda = lambda;
        s.alpha = alpha;
        s.vector = {1, f.mul(lambda, alpha), f.mul(lambda, f.mul(alpha, alpha))};
        out.push_back(s);
    }
    return out;
}

SlopeTripleCheck slope_triple_independent(const PrimeField& f, const Slope& s1,
                                          const Slope& s2, const Slope& s3) {
    if (s1.lambda != s2.lambda || s2.lambda != s3.lambda)
        throw std::invalid_argument("slope_triple_independent: mixed lambda");
    if (s1.alpha == s2.alpha || s1.alpha == s3.alpha || s2.alpha == s3.alpha)
        throw std::invalid_argument("slope_triple_independent: repeated alpha");

    auto det3 = [&](const std::array<long long, 3>& a, const std::array<long long, 3>& b,
                    const std::array<long long, 3>& c) {
        long long t1 = f.mul(a[0], f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1])));
        long long t2 = f.mul(a[1], f.sub(f.mul(b[0], c[2]), f.mul(b[2], c[0])));
        long long t3 = f.mul(a[2], f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0])));
        return f.add(f.sub(t1, t2), t3);
    };

    SlopeTripleCheck out;
    out.det_cofactor = det3(s1.vector, s2.vector, s3.vector);
    long long lam2 = f.mul(s1.lambda, s1.lambda);
    out.det_closed_form =
        f.mul(lam2, f.mul(f.sub(s3.alpha, s1.alpha),
                          f.mul(f.sub(s3.alpha, s2.alpha), f.sub(s2.alpha, s1.alpha))));
    out.independent = out.det_cofactor == out.det_closed_form && out.det_cofactor != 0;
    return out;
}

std::vector<AffineLine> lines_for(const PrimeField& f, long long lambda) {
    std::vector<Slope> slopes = moment_curve(f, lambda);
    long long q = f.order();
    std::vector<AffineLine> out;
    out.reserve(size_t(q * q * (q - 1)));
    for (const Slope& s : slopes)
        for (long long y = 0; y < q; ++y)
            for (long long z = 0; z < q; ++z)
                out.push_back(AffineLine{s, FieldPoint{0, y, z}});
    return out;
}

bool lines_intersect(const PrimeField& f, const AffineLine& a, const AffineLine& b,
                     FieldPoint* where) {
    // x-components of slopes are both 1 and both bases sit at x = 0, so an
    // intersection forces equal line parameters beta.
    if (a.slope.vector == b.slope.vector) {
        if (a.base == b.base) throw std::invalid_argument("lines_intersect: same line");
        return false; // parallel
    }
    long long dy = f.sub(b.base.y, a.base.y);
    long long dz = f.sub(b.base.z, a.base.z);
    long long sy = f.sub(a.slope.vector[1], b.slope.vector[1]);
    long long sz = f.sub(a.slope.vector[2], b.slope.vector[2]);
    // beta * sy = dy and beta * sz = dz must agree
    long long beta;
    if (sy != 0) {
        beta = f.mul(dy, f.inv(sy));
        if (f.mul(beta, sz) != dz) return false;
    } else {
        if (dy != 0) return false;
        if (sz == 0) return false; // distinct slopes cannot have sy = sz = 0
        beta = f.mul(dz, f.inv(sz));
    }
    if (where) *where = a.point_at(beta, f);
    return true;
}

} // namespace ramseypack

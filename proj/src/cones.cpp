#include "grassmori/cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassmori::cones {

namespace {

Integer int_dot(const Ray& a, const Ray& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Ray& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Ray negated(Ray v)
{
    for (auto& x : v) x = -x;
    return v;
}

std::vector<Ray> canonical_set(std::vector<Ray> rays)
{
    std::vector<Ray> out;
    for (auto& r : rays) {
        if (is_zero(r)) continue;
        out.push_back(primitive(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RatMatrix rows_to_matrix(const std::vector<Ray>& rows, std::size_t dim)
{
    std::vector<RatVector> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.push_back(to_rational(row));
    return RatMatrix::from_rows(r, dim);
}

// One ray of the running double description: the vector and the set of
// processed inequalities it makes tight.
struct DDRay {
    Ray v;
    std::vector<bool> tight;
};

// Extreme rays of a pointed cone { v : A v >= 0 }, A of full column rank.
std::vector<Ray> pointed_extreme_rays(std::size_t dim, const std::vector<Ray>& rows)
{
    // Initial simplicial cone from the first dim independent rows.
    std::vector<std::size_t> basis_rows;
    std::vector<Ray> chosen;
    for (std::size_t i = 0; i < rows.size() && basis_rows.size() < dim; ++i) {
        chosen.push_back(rows[i]);
        if (rank(rows_to_matrix(chosen, dim)) == chosen.size())
            basis_rows.push_back(i);
        else
            chosen.pop_back();
    }
    if (basis_rows.size() != dim) throw std::logic_error("double description: inequality system is not pointed");

    // Columns of A0^{-1}: the ray opposite row j is tight on every other basis row.
    const RatMatrix a0 = rows_to_matrix(chosen, dim);
    std::vector<DDRay> rays;
    std::vector<std::size_t> order = basis_rows;
    std::vector<bool> used(rows.size(), false);
    for (auto i : basis_rows) used[i] = true;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVector unit(dim);
        unit[j] = 1;
        auto x = solve(a0, unit);
        DDRay ray{primitive(*x), std::vector<bool>(dim, true)};
        ray.tight[j] = false;
        rays.push_back(std::move(ray));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i]) order.push_back(i);

    for (std::size_t step = dim; step < order.size(); ++step) {
        const Ray& a = rows[order[step]];
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Integer> val(rays.size());
        for (std::size_t t = 0; t < rays.size(); ++t) {
            val[t] = int_dot(a, rays[t].v);
            (val[t] > 0 ? pos : val[t] < 0 ? neg : zero).push_back(t);
        }
        std::vector<DDRay> next;
        for (auto t : pos) {
            next.push_back(rays[t]);
            next.back().tight.push_back(false);
        }
        for (auto t : zero) {
            next.push_back(rays[t]);
            next.back().tight.push_back(true);
        }
        // Combinatorial adjacency: p and q are adjacent iff no third ray is tight
        // on every inequality where both are tight.
        for (auto p : pos) {
            for (auto q : neg) {
                std::vector<std::size_t> common;
                for (std::size_t c = 0; c < rays[p].tight.size(); ++c)
                    if (rays[p].tight[c] && rays[q].tight[c]) common.push_back(c);
                if (common.size() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    adjacent = !std::all_of(common.begin(), common.end(),
                                            [&](std::size_t c) { return rays[t].tight[c]; });
                }
                if (!adjacent) continue;
                Ray w(dim);
                for (std::size_t c = 0; c < dim; ++c) w[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
                std::vector<bool> tight(rays[p].tight.size() + 1, false);
                for (auto c : common) tight[c] = true;
                tight.back() = true;
                next.push_back({primitive(w), std::move(tight)});
            }
        }
        rays = std::move(next);
    }
    std::vector<Ray> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return canonical_set(std::move(out));
}

} // namespace

// ---------------------------------------------------------------------------

Pairing::Pairing(RatMatrix gram) : gram_(std::move(gram))
{
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Pairing: Gram matrix must be square");
}

Pairing Pairing::standard(std::size_t dim) { return Pairing(RatMatrix::identity(dim)); }

Pairing Pairing::intersection(std::size_t k)
{
    std::vector<Rational> e((k + 1) * (k + 1));
    e[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) e[i * (k + 1) + i] = -1;
    return Pairing(RatMatrix(k + 1, k + 1, std::move(e)));
}

Rational Pairing::operator()(const RatVector& u, const RatVector& v) const { return dot(u, gram_ * v); }

Ray primitive(const Ray& v) { return primitive_integer_vector(to_rational(v)); }
Ray primitive(const RatVector& v) { return primitive_integer_vector(v); }

RatVector to_rational(const Ray& v) { return grassmori::to_rational(v); }

std::vector<Ray> solve_inequalities(std::size_t dim, const std::vector<Ray>& rows)
{
    for (const auto& r : rows)
        if (r.size() != dim) throw std::invalid_argument("solve_inequalities: row length mismatch");
    if (dim == 0) return {};

    // Split off the lineality space L = ker A and work in L^⊥, where the cone is pointed.
    std::vector<Ray> lineality;
    for (const auto& v : nullspace(rows.empty() ? RatMatrix::zero(1, dim) : rows_to_matrix(rows, dim)))
        lineality.push_back(primitive(v));

    std::vector<Ray> out;
    if (lineality.size() < dim) {
        std::vector<Ray> system;
        for (const auto& r : rows)
            if (!is_zero(r)) system.push_back(primitive(r));
        for (const auto& l : lineality) {
            system.push_back(l);
            system.push_back(negated(l));
        }
        out = pointed_extreme_rays(dim, system);
    }
    for (const auto& l : lineality) {
        out.push_back(l);
        out.push_back(negated(l));
    }
    return canonical_set(std::move(out));
}

// ---------------------------------------------------------------------------

RationalCone::RationalCone(std::size_t ambient_dim, const std::vector<Ray>& generators) : ambient_(ambient_dim)
{
    for (const auto& g : generators)
        if (g.size() != ambient_) throw std::invalid_argument("RationalCone: generator has the wrong dimension");
    generators_ = canonical_set(generators);
    dual_ = solve_inequalities(ambient_, generators_);
}

namespace {
std::vector<Ray> to_rays(const std::vector<RatVector>& gens)
{
    std::vector<Ray> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(primitive(g));
    return out;
}
} // namespace

RationalCone::RationalCone(std::size_t ambient_dim, const std::vector<RatVector>& generators)
    : RationalCone(ambient_dim, to_rays(generators))
{
}

bool RationalCone::contains(const RatVector& v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("RationalCone::contains: dimension mismatch");
    return std::all_of(dual_.begin(), dual_.end(), [&](const Ray& u) { return dot(to_rational(u), v) >= 0; });
}

bool RationalCone::contains(const Ray& v) const { return contains(to_rational(v)); }

RationalCone dual(const RationalCone& c, const Pairing& pairing)
{
    if (pairing.dim() != c.ambient_dim()) throw std::invalid_argument("dual: pairing dimension mismatch");
    // P(v, g) = v · (G g), so the inequality rows are G·g.
    std::vector<Ray> rows;
    for (const auto& g : c.generators()) rows.push_back(primitive(pairing.gram() * to_rational(g)));
    return RationalCone(c.ambient_dim(), solve_inequalities(c.ambient_dim(), rows));
}

std::vector<Ray> extremal_rays(const RationalCone& c)
{
    std::vector<Ray> keep = c.generators();
    for (std::size_t i = 0; i < keep.size();) {
        std::vector<Ray> others;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (j != i) others.push_back(keep[j]);
        if (RationalCone(c.ambient_dim(), others).contains(keep[i]))
            keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return keep;
}

bool is_subcone(const RationalCone& a, const RationalCone& b)
{
    if (a.ambient_dim() != b.ambient_dim()) return false;
    return std::all_of(a.generators().begin(), a.generators().end(), [&](const Ray& g) { return b.contains(g); });
}

bool same_cone(const RationalCone& a, const RationalCone& b)
{
    if (a.ambient_dim() != b.ambient_dim()) return false;
    if (extremal_rays(a) == extremal_rays(b)) return true;
    // With a lineality space the minimal generating set is not unique.
    return is_subcone(a, b) && is_subcone(b, a);
}

} // namespace grassmori::cones

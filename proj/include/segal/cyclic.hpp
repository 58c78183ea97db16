#pragma once

// Connes' cyclic category: morphisms <m> -> <n> in normalized degree-one
// integer-line representation. A morphism is stored as the restriction to
// {0, ..., m} of a weakly monotone F : Z -> Z with F(x + m + 1) = F(x) + n + 1,
// normalized so that 0 <= F(0) <= n. Two lifts differing by a multiple of
// n + 1 present the same morphism, so the normal form is unique.

#include <string>
#include <utility>
#include <vector>

#include "segal/detail/util.hpp"
#include "segal/simplex.hpp"

namespace segal {

/// Rotation +m of the standard cyclic set <n>; the automorphisms of <n> form
/// a cyclic group of order n + 1 generated by +1.
struct Rotation {
    int n = 0;
    int amount = 0;

    Rotation(int object, int by) : n(object), amount(detail::mod_positive(by, object + 1)) {
        if (object < 0) detail::fail("Rotation: object index must be >= 0");
    }

    friend bool operator==(const Rotation& a, const Rotation& b) {
        return a.n == b.n && a.amount == b.amount;
    }
};

class CyclicMap {
public:
    // Requires an already-normal lift; see normalize() for raw lifts.
    CyclicMap(int dom_n, int cod_n, std::vector<int> lift)
        : dom_n_(dom_n), cod_n_(cod_n), lift_(std::move(lift)) {
        if (dom_n_ < 0 || cod_n_ < 0) detail::fail("CyclicMap: objects must be >= <0>");
        if (static_cast<int>(lift_.size()) != dom_n_ + 1)
            detail::fail("CyclicMap: lift length must be dom + 1");
        for (std::size_t i = 1; i < lift_.size(); ++i)
            if (lift_[i] < lift_[i - 1]) detail::fail("CyclicMap: lift not weakly increasing");
        if (lift_.back() - lift_.front() > cod_n_ + 1)
            detail::fail("CyclicMap: lift span exceeds one period");
        if (lift_.front() < 0 || lift_.front() > cod_n_)
            detail::fail("CyclicMap: lift not in normal form");
    }

    static CyclicMap identity(int n) {
        std::vector<int> lift(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) lift[static_cast<std::size_t>(i)] = i;
        return CyclicMap(n, n, std::move(lift));
    }

    int dom_n() const { return dom_n_; }
    int cod_n() const { return cod_n_; }
    const std::vector<int>& lift() const { return lift_; }

    /// Degree-one periodic extension of the lift at any integer.
    int lift_at(int x) const {
        int q = detail::floor_div(x, dom_n_ + 1);
        int r = x - q * (dom_n_ + 1);
        return lift_[static_cast<std::size_t>(r)] + q * (cod_n_ + 1);
    }

    /// Underlying map of cyclic sets, pointwise mod cod + 1.
    std::vector<int> point_map() const {
        std::vector<int> pts(lift_.size());
        for (std::size_t i = 0; i < lift_.size(); ++i)
            pts[i] = detail::mod_positive(lift_[i], cod_n_ + 1);
        return pts;
    }

    friend bool operator==(const CyclicMap& a, const CyclicMap& b) {
        return a.dom_n_ == b.dom_n_ && a.cod_n_ == b.cod_n_ && a.lift_ == b.lift_;
    }
    friend bool operator!=(const CyclicMap& a, const CyclicMap& b) { return !(a == b); }

private:
    int dom_n_;
    int cod_n_;
    std::vector<int> lift_;
};

/// Translate a raw monotone lift by multiples of cod + 1 into normal form.
inline CyclicMap normalize(int dom_n, int cod_n, std::vector<int> lift) {
    if (lift.empty()) detail::fail("normalize: empty lift");
    for (std::size_t i = 1; i < lift.size(); ++i)
        if (lift[i] < lift[i - 1]) detail::fail("normalize: lift not weakly increasing");
    if (lift.back() - lift.front() > cod_n + 1) detail::fail("normalize: lift span exceeds one period");
    int shift = detail::floor_div(lift.front(), cod_n + 1) * (cod_n + 1);
    for (int& v : lift) v -= shift;
    return CyclicMap(dom_n, cod_n, std::move(lift));
}

inline CyclicMap rotation_map(const Rotation& r) {
    std::vector<int> lift(static_cast<std::size_t>(r.n + 1));
    for (int i = 0; i <= r.n; ++i) lift[static_cast<std::size_t>(i)] = i + r.amount;
    return normalize(r.n, r.n, std::move(lift));
}

/// f o g via composition of periodic extensions, then renormalization.
inline CyclicMap compose_cyclic(const CyclicMap& f, const CyclicMap& g) {
    if (g.cod_n() != f.dom_n()) detail::fail("compose_cyclic: object mismatch");
    std::vector<int> lift(static_cast<std::size_t>(g.dom_n() + 1));
    for (int x = 0; x <= g.dom_n(); ++x)
        lift[static_cast<std::size_t>(x)] = f.lift_at(g.lift_at(x));
    return normalize(g.dom_n(), f.cod_n(), std::move(lift));
}

/// The canonical functor from the simplex category: the image sequence of a
/// monotone map is already a normal lift. Injective on hom-sets.
inline CyclicMap project_from_delta(const SimplexMap& f) {
    if (f.dom().empty() || f.cod().empty())
        detail::fail("project_from_delta: the empty ordinal has no cyclic image");
    return CyclicMap(f.dom().n, f.cod().n, f.images());
}

/// Unique factorization c = project_from_delta(f) o rotation r of the source.
inline std::pair<Rotation, SimplexMap> factorize(const CyclicMap& c) {
    const int m = c.dom_n();
    const int n = c.cod_n();
    // c = proj(f) o rot(r) means f(y) = c's extension at y - r, translated
    // into {0, ..., n}. Exactly one r in [0, m] admits such a translation.
    for (int r = 0; r <= m; ++r) {
        int lo = c.lift_at(-r);
        int hi = c.lift_at(m - r);
        if (detail::floor_div(lo, n + 1) != detail::floor_div(hi, n + 1)) continue;
        int shift = detail::floor_div(lo, n + 1) * (n + 1);
        std::vector<int> im(static_cast<std::size_t>(m + 1));
        for (int y = 0; y <= m; ++y) im[static_cast<std::size_t>(y)] = c.lift_at(y - r) - shift;
        return {Rotation(m, r), SimplexMap(Ordinal{m}, Ordinal{n}, std::move(im))};
    }
    detail::fail("factorize: no rotation window fits; lift invariants violated");
}

/// All morphisms <m> -> <n> in normal form; (m+1) * C(m+n+1, m+1) of them.
inline std::vector<CyclicMap> enumerate_cyclic_maps(int m, int n) {
    std::vector<CyclicMap> out;
    for (int f0 = 0; f0 <= n; ++f0) {
        detail::for_each_monotone_sequence(m, f0, f0 + n + 1, [&](const std::vector<int>& tail) {
            std::vector<int> lift;
            lift.reserve(static_cast<std::size_t>(m + 1));
            lift.push_back(f0);
            for (int v : tail) lift.push_back(v);
            out.emplace_back(m, n, std::move(lift));
        });
    }
    return out;
}

// Display form close to the definition via pullbacks of linear orders: the
// underlying set map together with the rotation of the source order.
inline std::string describe(const CyclicMap& c) {
    auto [rot, f] = factorize(c);
    std::string s = "<" + std::to_string(c.dom_n()) + ">-><" + std::to_string(c.cod_n()) + "> points(";
    auto pts = c.point_map();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pts[i]);
    }
    s += ") order(";
    for (int i = 0; i <= c.dom_n(); ++i) {
        if (i) s += "<";
        s += std::to_string(detail::mod_positive(i - rot.amount, c.dom_n() + 1));
    }
    s += ")";
    return s;
}

}  // namespace segal

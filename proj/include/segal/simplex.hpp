#pragma once

// Objects and morphisms of the simplex category and its augmentation:
// standard ordinals [n], weakly monotone maps stored by image sequence,
// composition, join, activity classification and Joyal duality.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segal/detail/util.hpp"

namespace segal {

// The object [n] = {0 < ... < n}; n = -1 encodes the empty ordinal, which
// belongs to the augmented category only.
struct Ordinal {
    int n = -1;

    constexpr Ordinal() = default;
    constexpr explicit Ordinal(int value) : n(value) {}

    constexpr int size() const { return n + 1; }
    constexpr bool empty() const { return n < 0; }

    friend constexpr bool operator==(Ordinal a, Ordinal b) { return a.n == b.n; }
    friend constexpr bool operator!=(Ordinal a, Ordinal b) { return a.n != b.n; }
};

inline Ordinal join(Ordinal a, Ordinal b) { return Ordinal{a.n + b.n + 1}; }

/// A weakly monotone map [m] -> [n], m >= -1, n >= -1, stored by its image
/// sequence. The empty map out of [-1] has an empty sequence.
class SimplexMap {
public:
    SimplexMap(Ordinal dom, Ordinal cod, std::vector<int> images)
        : dom_(dom), cod_(cod), images_(std::move(images)) {
        if (dom_.n < -1 || cod_.n < -1) detail::fail("SimplexMap: ordinal below [-1]");
        if (static_cast<int>(images_.size()) != dom_.size())
            detail::fail("SimplexMap: image sequence length must be dom.n + 1");
        int prev = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            int v = images_[i];
            if (v < 0 || v > cod_.n) detail::fail("SimplexMap: image out of range");
            if (i > 0 && v < prev) detail::fail("SimplexMap: images not weakly increasing");
            prev = v;
        }
    }

    static SimplexMap identity(Ordinal n) {
        std::vector<int> im(static_cast<std::size_t>(n.size()));
        for (int i = 0; i <= n.n; ++i) im[static_cast<std::size_t>(i)] = i;
        return SimplexMap(n, n, std::move(im));
    }

    // d^i : [n-1] -> [n], skips i
    static SimplexMap face(Ordinal cod, int i) {
        if (cod.n < 0 || i < 0 || i > cod.n) detail::fail("face: index out of range");
        std::vector<int> im;
        im.reserve(static_cast<std::size_t>(cod.n));
        for (int x = 0; x <= cod.n; ++x)
            if (x != i) im.push_back(x);
        return SimplexMap(Ordinal{cod.n - 1}, cod, std::move(im));
    }

    // s^i : [n+1] -> [n], repeats i
    static SimplexMap degeneracy(Ordinal cod, int i) {
        if (cod.n < 0 || i < 0 || i > cod.n) detail::fail("degeneracy: index out of range");
        std::vector<int> im;
        im.reserve(static_cast<std::size_t>(cod.n + 2));
        for (int x = 0; x <= cod.n; ++x) {
            im.push_back(x);
            if (x == i) im.push_back(x);
        }
        return SimplexMap(Ordinal{cod.n + 1}, cod, std::move(im));
    }

    // The unique monotone map with the given fiber sizes over [n]; a monotone
    // map is determined by them.
    static SimplexMap from_fibers(Ordinal cod, const std::vector<int>& sizes) {
        if (static_cast<int>(sizes.size()) != cod.size())
            detail::fail("from_fibers: need one fiber size per point of the codomain");
        std::vector<int> im;
        for (int i = 0; i <= cod.n; ++i) {
            if (sizes[static_cast<std::size_t>(i)] < 0) detail::fail("from_fibers: negative fiber");
            for (int c = 0; c < sizes[static_cast<std::size_t>(i)]; ++c) im.push_back(i);
        }
        Ordinal dom{static_cast<int>(im.size()) - 1};
        return SimplexMap(dom, cod, std::move(im));
    }

    Ordinal dom() const { return dom_; }
    Ordinal cod() const { return cod_; }
    const std::vector<int>& images() const { return images_; }

    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

    std::vector<int> fiber_sizes() const {
        std::vector<int> sizes(static_cast<std::size_t>(cod_.size()), 0);
        for (int v : images_) ++sizes[static_cast<std::size_t>(v)];
        return sizes;
    }

    std::uint64_t image_mask() const {
        std::uint64_t m = 0;
        for (int v : images_) m |= std::uint64_t{1} << v;
        return m;
    }

    bool is_identity() const {
        if (dom_ != cod_) return false;
        for (int i = 0; i <= dom_.n; ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    bool is_injective() const {
        for (std::size_t i = 1; i < images_.size(); ++i)
            if (images_[i] == images_[i - 1]) return false;
        return true;
    }

    bool is_surjective() const {
        if (cod_.empty()) return dom_.empty();
        return is_surjective_impl();
    }

    bool is_iso() const { return dom_ == cod_ && is_injective() && is_surjective(); }

    friend bool operator==(const SimplexMap& a, const SimplexMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.images_ == b.images_;
    }
    friend bool operator!=(const SimplexMap& a, const SimplexMap& b) { return !(a == b); }

private:
    bool is_surjective_impl() const {
        std::vector<char> hit(static_cast<std::size_t>(cod_.size()), 0);
        for (int v : images_) hit[static_cast<std::size_t>(v)] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }

    Ordinal dom_;
    Ordinal cod_;
    std::vector<int> images_;
};

/// f o g, defined when g.cod == f.dom.
inline SimplexMap compose(const SimplexMap& f, const SimplexMap& g) {
    if (g.cod() != f.dom()) detail::fail("compose: domain mismatch");
    std::vector<int> im;
    im.reserve(g.images().size());
    for (int x : g.images()) im.push_back(f(x));
    return SimplexMap(g.dom(), f.cod(), std::move(im));
}

/// Join of maps: acts as f on the first block and as g shifted by
/// f.cod.n + 1 on the second. Monoidal with unit the identity of [-1].
inline SimplexMap join(const SimplexMap& f, const SimplexMap& g) {
    std::vector<int> im;
    im.reserve(f.images().size() + g.images().size());
    for (int v : f.images()) im.push_back(v);
    int shift = f.cod().n + 1;
    for (int v : g.images()) im.push_back(v + shift);
    return SimplexMap(join(f.dom(), g.dom()), join(f.cod(), g.cod()), std::move(im));
}

struct ActivityProfile {
    bool left_active = false;
    bool right_active = false;
    bool active = false;
    bool left_strict = false;
    bool right_strict = false;
    bool injective = false;
    bool primitive = false;
    bool preprimitive = false;
};

/// Endpoint and fiber classification of a map in the non-augmented category.
inline ActivityProfile classify_map(const SimplexMap& f) {
    if (f.dom().empty() || f.cod().empty())
        detail::fail("classify_map: requires nonempty domain and codomain");
    const int m = f.dom().n;
    const int n = f.cod().n;
    ActivityProfile p;
    p.left_active = f(0) == 0;
    p.right_active = f(m) == n;
    p.active = p.left_active && p.right_active;
    p.left_strict = p.left_active && (m == 0 || f(1) > 0);
    p.right_strict = p.right_active && (m == 0 || f(m - 1) < n);
    p.injective = f.is_injective();
    int nonsingleton = 0;
    for (int sz : f.fiber_sizes())
        if (sz != 1) ++nonsingleton;
    p.primitive = nonsingleton == 1;
    p.preprimitive = p.primitive || f.is_iso();
    return p;
}

/// For right active f : [m] -> [n], the left active map [n] -> [m] sending
/// j to min f^{-1}{j, ..., n}.
inline SimplexMap joyal_minus(const SimplexMap& f) {
    if (!classify_map(f).right_active) detail::fail("joyal_minus: map is not right active");
    const int m = f.dom().n;
    const int n = f.cod().n;
    std::vector<int> im(static_cast<std::size_t>(n + 1));
    int x = m;
    for (int j = n; j >= 0; --j) {
        while (x > 0 && f(x - 1) >= j) --x;
        im[static_cast<std::size_t>(j)] = x;
    }
    return SimplexMap(f.cod(), f.dom(), std::move(im));
}

/// For left active g : [n] -> [m], the right active map [m] -> [n] sending
/// i to max g^{-1}{0, ..., i}. Inverse to joyal_minus.
inline SimplexMap joyal_plus(const SimplexMap& g) {
    if (!classify_map(g).left_active) detail::fail("joyal_plus: map is not left active");
    const int n = g.dom().n;
    const int m = g.cod().n;
    std::vector<int> im(static_cast<std::size_t>(m + 1));
    int x = 0;
    for (int i = 0; i <= m; ++i) {
        while (x < n && g(x + 1) <= i) ++x;
        im[static_cast<std::size_t>(i)] = x;
    }
    return SimplexMap(g.cod(), g.dom(), std::move(im));
}

// Optional per-flag mask for enumerate_maps; unset fields match anything.
struct ActivityFilter {
    std::optional<bool> left_active;
    std::optional<bool> right_active;
    std::optional<bool> active;
    std::optional<bool> left_strict;
    std::optional<bool> right_strict;
    std::optional<bool> injective;
    std::optional<bool> primitive;
    std::optional<bool> preprimitive;

    bool matches(const ActivityProfile& p) const {
        auto ok = [](const std::optional<bool>& want, bool have) { return !want || *want == have; };
        return ok(left_active, p.left_active) && ok(right_active, p.right_active) &&
               ok(active, p.active) && ok(left_strict, p.left_strict) &&
               ok(right_strict, p.right_strict) && ok(injective, p.injective) &&
               ok(primitive, p.primitive) && ok(preprimitive, p.preprimitive);
    }
};

/// All weakly monotone maps [m] -> [n] in lexicographic order of image
/// sequences; C(m + n + 1, m + 1) maps unfiltered.
inline std::vector<SimplexMap> enumerate_maps(Ordinal m, Ordinal n,
                                              const ActivityFilter& filter = {}) {
    std::vector<SimplexMap> out;
    if (m.empty()) {
        out.push_back(SimplexMap(m, n, {}));
        return out;
    }
    if (n.empty()) return out;  // no map from a nonempty ordinal into [-1]
    detail::for_each_monotone_sequence(m.size(), 0, n.n, [&](const std::vector<int>& seq) {
        SimplexMap f(m, n, seq);
        if (filter.matches(classify_map(f))) out.push_back(std::move(f));
    });
    return out;
}

inline std::string to_string(const SimplexMap& f) {
    std::string s = "<";
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.images()[i]);
    }
    s += ">:[" + std::to_string(f.dom().n) + "]->[" + std::to_string(f.cod().n) + "]";
    return s;
}

}  // namespace segal

#pragma once

// Claws and their cubes: compatibility classification, Cech cubes via the
// explicit join-of-fiber-products formula, a bounded pushout oracle for the
// simplex and cyclic categories, rotation, and primitive decomposition.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "segal/cyclic.hpp"
#include "segal/simplex.hpp"

namespace segal {

enum class Cat { Delta, Lambda };
enum class Mode { criterion, oracle, both };

/// An S-indexed tuple of maps with common codomain [n]. Prongs may live in
/// the augmented category (empty domains allowed); the codomain does not.
struct Claw {
    Ordinal base;
    std::vector<SimplexMap> prongs;

    Claw(Ordinal n, std::vector<SimplexMap> maps) : base(n), prongs(std::move(maps)) {
        if (base.empty()) detail::fail("Claw: codomain must be an object of the simplex category");
        if (prongs.empty()) detail::fail("Claw: at least one prong required");
        for (const auto& f : prongs)
            if (f.cod() != base) detail::fail("Claw: all prongs must share the codomain");
    }

    static Claw from_fibers(Ordinal n, const std::vector<std::vector<int>>& fiber_vectors) {
        std::vector<SimplexMap> maps;
        maps.reserve(fiber_vectors.size());
        for (const auto& v : fiber_vectors) maps.push_back(SimplexMap::from_fibers(n, v));
        return Claw(n, std::move(maps));
    }

    int arms() const { return static_cast<int>(prongs.size()); }

    friend bool operator==(const Claw& a, const Claw& b) {
        return a.base == b.base && a.prongs == b.prongs;
    }
};

struct CompatibilityReport {
    bool backwards_compatible = true;
    bool compatible = true;
    bool cyclically_compatible = true;

    // first violation per failed condition; column is the i of the fiber
    // condition (for bc2 the pair in question is {column-1, column})
    struct ColumnPair {
        int column = -1;
        int prong_a = -1;
        int prong_b = -1;
    };
    std::optional<ColumnPair> backwards_witness;
    std::optional<ColumnPair> bc1_witness;
    std::optional<ColumnPair> bc2_witness;
    // two prongs missing {0, n}, or a single prong with empty domain
    // (prong_b = -1 in that case)
    std::optional<ColumnPair> cyclic_witness;
};

/// Fiberwise compatibility classification of a claw.
inline CompatibilityReport classify_claw(const Claw& c) {
    const int n = c.base.n;
    const int k = c.arms();
    std::vector<std::vector<int>> fibers;
    fibers.reserve(static_cast<std::size_t>(k));
    for (const auto& f : c.prongs) fibers.push_back(f.fiber_sizes());

    CompatibilityReport r;
    for (int i = 0; i <= n; ++i) {
        int big = -1, special = -1;
        for (int s = 0; s < k; ++s) {
            int sz = fibers[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
            if (sz > 1) {
                if (big >= 0 && r.backwards_compatible) {
                    r.backwards_compatible = false;
                    r.backwards_witness = CompatibilityReport::ColumnPair{i, big, s};
                }
                big = s;
            }
            if (sz != 1) {
                if (special >= 0 && !r.bc1_witness)
                    r.bc1_witness = CompatibilityReport::ColumnPair{i, special, s};
                special = s;
            }
        }
    }
    std::optional<CompatibilityReport::ColumnPair> bc2;
    for (int i = 1; i <= n && !bc2; ++i) {
        int missing = -1;
        for (int s = 0; s < k; ++s) {
            const auto& fib = fibers[static_cast<std::size_t>(s)];
            bool covered = fib[static_cast<std::size_t>(i - 1)] > 0 && fib[static_cast<std::size_t>(i)] > 0;
            if (!covered) {
                if (missing >= 0) {
                    bc2 = CompatibilityReport::ColumnPair{i, missing, s};
                    break;
                }
                missing = s;
            }
        }
    }
    r.bc2_witness = bc2;
    r.compatible = !r.bc1_witness && !r.bc2_witness;

    r.cyclically_compatible = r.compatible;
    if (r.cyclically_compatible) {
        int missing = -1;
        for (int s = 0; s < k; ++s) {
            if (c.prongs[static_cast<std::size_t>(s)].dom().empty()) {
                // not a claw of the non-augmented category
                r.cyclically_compatible = false;
                r.cyclic_witness = CompatibilityReport::ColumnPair{-1, s, -1};
                break;
            }
            const auto& fib = fibers[static_cast<std::size_t>(s)];
            bool has_ends = fib.front() > 0 && fib.back() > 0;
            if (!has_ends) {
                if (missing >= 0) {
                    r.cyclically_compatible = false;
                    r.cyclic_witness = CompatibilityReport::ColumnPair{-1, missing, s};
                    break;
                }
                missing = s;
            }
        }
    }
    return r;
}

struct no_cube_error : std::runtime_error {
    int column;
    int prong_a;
    int prong_b;
    no_cube_error(int i, int a, int b)
        : std::runtime_error("no Cech cube: claw is not backwards compatible at column " +
                             std::to_string(i) + " (prongs " + std::to_string(a) + ", " +
                             std::to_string(b) + ")"),
          column(i), prong_a(a), prong_b(b) {}
};

/// A cube stored cornerwise: a contravariant functor from subsets of S into
/// the augmented simplex category. edge(T, s) is the structure map
/// corner(T + s) -> corner(T); all 2-faces are checked to commute.
class Cube {
public:
    Cube(int arms, std::vector<Ordinal> corners, std::vector<SimplexMap> edges)
        : arms_(arms), corners_(std::move(corners)), edges_(std::move(edges)) {
        const std::uint32_t total = std::uint32_t{1} << arms_;
        if (arms_ < 1 || corners_.size() != total || edges_.size() != total * static_cast<std::uint32_t>(arms_))
            detail::fail("Cube: corner/edge tables have wrong shape");
        for (std::uint32_t mask = 0; mask < total; ++mask)
            for (int s = 0; s < arms_; ++s) {
                std::uint32_t slot = mask * static_cast<std::uint32_t>(arms_) + static_cast<std::uint32_t>(s);
                if (mask & (1u << s)) {
                    // slot carries no data; normalize so cube equality is structural
                    edges_[slot] = SimplexMap::identity(corner(mask));
                    continue;
                }
                const auto& e = edges_[slot];
                if (e.dom() != corner(mask | (1u << s)) || e.cod() != corner(mask))
                    detail::fail("Cube: edge endpoints do not match corners");
            }
        for (std::uint32_t mask = 0; mask < total; ++mask)
            for (int s = 0; s < arms_; ++s)
                for (int t = s + 1; t < arms_; ++t) {
                    if (mask & ((1u << s) | (1u << t))) continue;
                    auto via_s = compose(edge(mask, s), edge(mask | (1u << s), t));
                    auto via_t = compose(edge(mask, t), edge(mask | (1u << t), s));
                    if (via_s != via_t) detail::fail("Cube: a 2-face does not commute");
                }
    }

    int arms() const { return arms_; }
    Ordinal corner(std::uint32_t mask) const { return corners_[mask]; }
    const SimplexMap& edge(std::uint32_t mask, int s) const {
        return edges_[mask * static_cast<std::uint32_t>(arms_) + static_cast<std::uint32_t>(s)];
    }

    /// Composite structure map corner(sup) -> corner(sub) for sub within sup.
    SimplexMap map_for(std::uint32_t sub, std::uint32_t sup) const {
        if ((sub & ~sup) != 0) detail::fail("Cube::map_for: sub is not contained in sup");
        SimplexMap acc = SimplexMap::identity(corner(sup));
        std::uint32_t cur = sup;
        for (int s = 0; s < arms_; ++s)
            if ((sup & ~sub) & (1u << s)) {
                cur &= ~(1u << s);
                acc = compose(edge(cur, s), acc);
            }
        return acc;
    }

    /// Direction in which every edge is an isomorphism, if any.
    std::optional<int> degenerate_direction() const {
        for (int s = 0; s < arms_; ++s) {
            bool all_iso = true;
            const std::uint32_t total = std::uint32_t{1} << arms_;
            for (std::uint32_t mask = 0; mask < total && all_iso; ++mask)
                if (!(mask & (1u << s)) && !edge(mask, s).is_iso()) all_iso = false;
            if (all_iso) return s;
        }
        return std::nullopt;
    }

    friend bool operator==(const Cube& a, const Cube& b) {
        return a.arms_ == b.arms_ && a.corners_ == b.corners_ && a.edges_ == b.edges_;
    }

private:
    int arms_;
    std::vector<Ordinal> corners_;     // indexed by subset bitmask
    std::vector<SimplexMap> edges_;    // edge(mask, s) at slot mask*arms + s
};

namespace detail {

// Per-column product of fiber sizes over the prongs selected by mask;
// backwards compatibility makes each column product a linear order.
inline std::vector<std::uint64_t> column_products(const std::vector<std::vector<int>>& fibers,
                                                  std::uint32_t mask, int n) {
    std::vector<std::uint64_t> prod(static_cast<std::size_t>(n + 1), 1);
    for (std::size_t s = 0; s < fibers.size(); ++s)
        if (mask & (std::uint32_t{1} << s))
            for (int i = 0; i <= n; ++i) prod[static_cast<std::size_t>(i)] *= static_cast<std::uint64_t>(fibers[s][static_cast<std::size_t>(i)]);
    return prod;
}

}  // namespace detail

/// The Cech cube of a backwards compatible claw, realized cornerwise as
/// joins of fiber products with the stable (column, fiber tuple) element
/// order; corner({t}) is the domain of prong t and edges are projections.
inline Cube cech_cube(const Claw& c) {
    auto rep = classify_claw(c);
    if (!rep.backwards_compatible) {
        auto w = *rep.backwards_witness;
        throw no_cube_error(w.column, w.prong_a, w.prong_b);
    }
    const int n = c.base.n;
    const int k = c.arms();
    std::vector<std::vector<int>> fibers;
    for (const auto& f : c.prongs) fibers.push_back(f.fiber_sizes());

    const std::uint32_t total = std::uint32_t{1} << k;
    std::vector<Ordinal> corners(total);
    std::vector<std::vector<std::uint64_t>> colprod(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        colprod[mask] = detail::column_products(fibers, mask, n);
        std::uint64_t sz = 0;
        for (auto v : colprod[mask]) sz += v;
        corners[mask] = Ordinal{static_cast<int>(sz) - 1};
    }

    // Edge corner(mask+s) -> corner(mask): drop the s coordinate. Element
    // (i, x_s, rest) has index prefix(i) + x_s * |rest block| + rest within
    // its column; the projection is column-preserving.
    std::vector<SimplexMap> edges;
    edges.reserve(total * static_cast<std::uint32_t>(k));
    for (std::uint32_t mask = 0; mask < total; ++mask)
        for (int s = 0; s < k; ++s) {
            if (mask & (1u << s)) {
                edges.push_back(SimplexMap::identity(Ordinal{0}));  // placeholder, unused slot
                continue;
            }
            const std::uint32_t up = mask | (1u << s);
            std::vector<int> im;
            im.reserve(static_cast<std::size_t>(corners[up].size()));
            std::uint64_t base_lo = 0;
            for (int i = 0; i <= n; ++i) {
                // at most one coordinate per column is non-singleton, so the
                // (x_s, rest)-nesting below agrees with the canonical
                // (column, fiber tuple) order no matter where s sits
                const std::uint64_t lo = colprod[mask][static_cast<std::size_t>(i)];
                const int ls = fibers[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
                for (int xs = 0; xs < ls; ++xs)
                    for (std::uint64_t rest = 0; rest < lo; ++rest)
                        im.push_back(static_cast<int>(base_lo + rest));
                base_lo += lo;
            }
            edges.emplace_back(corners[up], corners[mask], std::move(im));
        }
    return Cube(k, std::move(corners), std::move(edges));
}

/// Limit of the claw diagram restricted to the prongs in `mask`, computed in
/// posets: tuples with a common image point, under the product order.
/// Realizable in the simplex category exactly when the order is linear.
struct ClawLimit {
    bool is_linear = true;
    int first_nonlinear_column = -1;
    std::uint64_t size = 0;
    std::vector<std::uint64_t> column_sizes;
};

inline ClawLimit claw_limit(const Claw& c, std::uint32_t mask) {
    const int n = c.base.n;
    ClawLimit out;
    out.column_sizes.assign(static_cast<std::size_t>(n + 1), 1);
    std::vector<std::vector<int>> fibers;
    for (const auto& f : c.prongs) fibers.push_back(f.fiber_sizes());
    for (int i = 0; i <= n; ++i) {
        std::uint64_t prod = 1;
        int nontrivial = 0;
        for (std::size_t s = 0; s < fibers.size(); ++s)
            if (mask & (std::uint32_t{1} << s)) {
                int sz = fibers[s][static_cast<std::size_t>(i)];
                prod *= static_cast<std::uint64_t>(sz);
                if (sz > 1) ++nontrivial;
            }
        out.column_sizes[static_cast<std::size_t>(i)] = prod;
        // two incomparable tuples exist in a column as soon as two
        // coordinates both vary
        if (nontrivial > 1 && prod > 1 && out.is_linear) {
            out.is_linear = false;
            out.first_nonlinear_column = i;
        }
        out.size += prod;
    }
    return out;
}

/// Cyclic rotation of a claw: every fiber vector rotates by m, so that the
/// fiber over j of the result is the fiber over j - m of the input.
inline Claw rotate_claw(const Claw& c, int m) {
    const int period = c.base.size();
    const int shift = detail::mod_positive(m, period);
    std::vector<std::vector<int>> rotated;
    rotated.reserve(c.prongs.size());
    for (const auto& f : c.prongs) {
        auto fib = f.fiber_sizes();
        std::vector<int> out(fib.size());
        for (int j = 0; j < period; ++j)
            out[static_cast<std::size_t>(j)] =
                fib[static_cast<std::size_t>(detail::mod_positive(j - shift, period))];
        rotated.push_back(std::move(out));
    }
    return Claw::from_fibers(c.base, rotated);
}

/// Array rendering: one row per prong, one column per point of the base;
/// "*" marks a singleton fiber, the empty-set sign an empty fiber, and a
/// number a larger fiber.
inline std::string render_claw(const Claw& c) {
    std::string out;
    for (int s = 0; s < c.arms(); ++s) {
        if (s) out += "\n";
        auto fib = c.prongs[static_cast<std::size_t>(s)].fiber_sizes();
        for (std::size_t i = 0; i < fib.size(); ++i) {
            if (i) out += " ";
            if (fib[i] == 1)
                out += "*";
            else if (fib[i] == 0)
                out += "∅";
            else
                out += std::to_string(fib[i]);
        }
    }
    return out;
}

// ------------------------- bounded pushout oracle -------------------------

inline constexpr int kNoRefutation = -1000000;
inline constexpr int kNotRepresentable = -999999;  // square leaves the cyclic category

struct OracleResult {
    bool is_pushout = false;
    bool confident = true;     // false when the apex bound is below corner size + 2
    int refuted_at_apex = kNoRefutation;
};

namespace detail {

// #monotone q : B -> [p] with q o u = w, for u : A -> B given by images,
// w : A -> [p] given by images. Pure gap counting with pinned values.
inline std::uint64_t monotone_extension_count(const std::vector<int>& u, int b_n,
                                              const std::vector<int>& w, int p) {
    // consistency on repeated positions
    for (std::size_t x = 1; x < u.size(); ++x)
        if (u[x] == u[x - 1] && w[x] != w[x - 1]) return 0;
    std::uint64_t count = 1;
    int prev_pos = -1, prev_val = 0;
    for (std::size_t x = 0; x < u.size(); ++x) {
        if (x > 0 && u[x] == u[x - 1]) continue;
        int gap = u[x] - prev_pos - 1;
        int span = w[x] - prev_val;  // before the first pin prev_val = 0
        if (span < 0) return 0;
        count *= binom(span + gap, gap);
        prev_pos = u[x];
        prev_val = w[x];
    }
    int gap = b_n - prev_pos;
    count *= binom(p - prev_val + gap, gap);
    return count;
}

// #cyclic q : <b> -> <p> with q o u = w; counts exact monotone degree-one
// solutions with the pins of u reduced into the fundamental window.
inline std::uint64_t cyclic_extension_count(const CyclicMap& u, const CyclicMap& w, int p) {
    const int b = u.cod_n();
    std::map<int, long long> pins;  // window position -> pinned value
    for (int x = 0; x <= u.dom_n(); ++x) {
        int g = u.lift()[static_cast<std::size_t>(x)];
        int t = floor_div(g, b + 1);
        int pos = g - t * (b + 1);
        long long val = static_cast<long long>(w.lift()[static_cast<std::size_t>(x)]) -
                        static_cast<long long>(t) * (p + 1);
        auto [it, fresh] = pins.emplace(pos, val);
        if (!fresh && it->second != val) return 0;
    }
    std::uint64_t count = 1;
    auto first = pins.begin();
    for (auto it = pins.begin(); it != pins.end(); ++it) {
        auto next = std::next(it);
        long long from_pos = it->first, from_val = it->second;
        long long to_pos, to_val;
        if (next != pins.end()) {
            to_pos = next->first;
            to_val = next->second;
        } else {
            to_pos = first->first + b + 1;
            to_val = first->second + p + 1;
        }
        long long gap = to_pos - from_pos - 1;
        long long span = to_val - from_val;
        if (span < 0) return 0;
        count *= binom(static_cast<int>(span + gap), static_cast<int>(gap));
    }
    return count;
}

// sorted-unique count of small byte keys
inline std::uint64_t distinct_count(std::vector<std::string>& keys) {
    std::sort(keys.begin(), keys.end());
    return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

inline std::string encode_pair(const std::vector<int>& a, const std::vector<int>& b) {
    std::string s;
    s.reserve(2 * (a.size() + b.size()) + 1);
    auto put = [&s](int v) {
        s.push_back(static_cast<char>(v & 0xff));
        s.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    for (int v : a) put(v);
    s.push_back(1);
    for (int v : b) put(v);
    return s;
}

}  // namespace detail

/// Tests the pushout universal property of a commuting square against every
/// cocone with apex [p] (resp. <p>) for p up to apex_bound: for each apex the
/// restriction map from maps-out-of-the-total-corner to cocones must be a
/// bijection. Refutations are sound; confirmation is bounded.
inline OracleResult colimit_oracle(const Cube& square, Cat cat, int apex_bound = -1) {
    if (square.arms() != 2) detail::fail("colimit_oracle: expected a square");
    const Ordinal N = square.corner(0);
    const Ordinal B = square.corner(1);
    const Ordinal B2 = square.corner(2);
    const Ordinal A = square.corner(3);
    const SimplexMap& f = square.edge(0, 0);    // B  -> N
    const SimplexMap& f2 = square.edge(0, 1);   // B' -> N
    const SimplexMap& u = square.edge(1, 1);    // A  -> B
    const SimplexMap& u2 = square.edge(2, 0);   // A  -> B'

    int max_corner = std::max(std::max(N.size(), A.size()), std::max(B.size(), B2.size()));
    OracleResult res;
    if (apex_bound < 0) apex_bound = max_corner + 2;
    res.confident = apex_bound >= max_corner + 2;

    if (cat == Cat::Lambda) {
        if (N.empty() || B.empty() || B2.empty() || A.empty()) {
            // an empty corner has no image in the cyclic category
            res.is_pushout = false;
            res.refuted_at_apex = kNotRepresentable;
            return res;
        }
        auto fL = project_from_delta(f);
        auto f2L = project_from_delta(f2);
        auto uL = project_from_delta(u);
        auto u2L = project_from_delta(u2);
        for (int p = 0; p <= apex_bound; ++p) {
            auto hs = enumerate_cyclic_maps(N.n, p);
            std::vector<std::string> keys;
            keys.reserve(hs.size());
            for (const auto& h : hs)
                keys.push_back(detail::encode_pair(compose_cyclic(h, fL).lift(),
                                                   compose_cyclic(h, f2L).lift()));
            std::uint64_t image = detail::distinct_count(keys);
            std::uint64_t cocones = 0;
            for (const auto& w : enumerate_cyclic_maps(A.n, p)) {
                std::uint64_t e1 = detail::cyclic_extension_count(uL, w, p);
                if (e1) cocones += e1 * detail::cyclic_extension_count(u2L, w, p);
            }
            if (image != hs.size() || image != cocones) {
                res.is_pushout = false;
                res.refuted_at_apex = p;
                return res;
            }
        }
        res.is_pushout = true;
        return res;
    }

    // simplex-category side, apexes from the empty ordinal upwards
    for (int p = -1; p <= apex_bound; ++p) {
        std::uint64_t hcount, image, cocones;
        if (p == -1) {
            hcount = N.empty() ? 1 : 0;
            image = hcount;
            cocones = (B.empty() && B2.empty()) ? 1 : 0;
        } else {
            auto hs = enumerate_maps(N, Ordinal{p});
            hcount = hs.size();
            std::vector<std::string> keys;
            keys.reserve(hs.size());
            for (const auto& h : hs)
                keys.push_back(detail::encode_pair(compose(h, f).images(), compose(h, f2).images()));
            image = detail::distinct_count(keys);
            cocones = 0;
            for (const auto& w : enumerate_maps(A, Ordinal{p})) {
                std::uint64_t e1 =
                    detail::monotone_extension_count(u.images(), B.n, w.images(), p);
                if (e1)
                    cocones += e1 * detail::monotone_extension_count(u2.images(), B2.n, w.images(), p);
            }
        }
        if (image != hcount || image != cocones) {
            res.is_pushout = false;
            res.refuted_at_apex = p;
            return res;
        }
    }
    res.is_pushout = true;
    return res;
}

/// The 2-face of a cube at corner set T in directions s < s', as a square.
inline Cube face_square(const Cube& q, std::uint32_t T, int s, int s2) {
    std::uint32_t bs = std::uint32_t{1} << s, bt = std::uint32_t{1} << s2;
    std::vector<Ordinal> corners = {q.corner(T), q.corner(T | bs), q.corner(T | bt),
                                    q.corner(T | bs | bt)};
    std::vector<SimplexMap> edges(8, SimplexMap::identity(Ordinal{0}));
    edges[0 * 2 + 0] = q.edge(T, s);         // {0} -> {}
    edges[0 * 2 + 1] = q.edge(T, s2);        // {1} -> {}
    edges[1 * 2 + 0] = SimplexMap::identity(corners[1]);  // unused slot
    edges[1 * 2 + 1] = q.edge(T | bs, s2);   // {0,1} -> {0}
    edges[2 * 2 + 0] = q.edge(T | bt, s);    // {0,1} -> {1}
    edges[2 * 2 + 1] = SimplexMap::identity(corners[2]);
    edges[3 * 2 + 0] = SimplexMap::identity(corners[3]);
    edges[3 * 2 + 1] = SimplexMap::identity(corners[3]);
    return Cube(2, std::move(corners), std::move(edges));
}

/// Strong biCartesian-ness of the claw's Cech cube. Criterion mode answers
/// by the fiberwise classification; oracle mode runs the bounded pushout
/// oracle on every 2-face; both mode insists they agree.
inline bool is_strongly_bicartesian(const Claw& c, Cat cat, Mode mode, int apex_bound = -1) {
    auto rep = classify_claw(c);
    bool criterion = (cat == Cat::Delta) ? rep.compatible : rep.cyclically_compatible;
    if (mode == Mode::criterion) return criterion;

    bool oracle;
    if (!rep.backwards_compatible) {
        oracle = false;  // no candidate cube at all
    } else {
        Cube q = cech_cube(c);
        oracle = true;
        if (cat == Cat::Lambda) {
            const std::uint32_t total = std::uint32_t{1} << c.arms();
            for (std::uint32_t m = 0; m < total && oracle; ++m)
                if (q.corner(m).empty()) oracle = false;  // leaves the cyclic category
        }
        const std::uint32_t total = std::uint32_t{1} << c.arms();
        for (std::uint32_t T = 0; T < total && oracle; ++T)
            for (int s = 0; s < c.arms() && oracle; ++s) {
                if (T & (1u << s)) continue;
                for (int t = s + 1; t < c.arms() && oracle; ++t) {
                    if (T & (1u << t)) continue;
                    if (!colimit_oracle(face_square(q, T, s, t), cat, apex_bound).is_pushout)
                        oracle = false;
                }
            }
    }
    if (mode == Mode::both && criterion != oracle)
        throw std::logic_error("is_strongly_bicartesian: criterion and oracle disagree");
    return oracle;
}

// --------------------- primitive decomposition ----------------------------

/// The canonical factorization of f through the objects f^{-1}[i] * [n\i],
/// returned as the chain of preprimitive factors from the domain side down
/// to the codomain; composing them in reverse order recovers f. With
/// drop_identities only the primitive factors remain.
inline std::vector<SimplexMap> primitive_factorize(const SimplexMap& f, bool drop_identities = false) {
    if (f.cod().empty()) detail::fail("primitive_factorize: codomain must be nonempty");
    const int n = f.cod().n;
    auto fib = f.fiber_sizes();
    std::vector<SimplexMap> chain;
    // I_i has fiber profile (fibers of f up to column i, singletons after)
    for (int i = n; i >= 0; --i) {
        int prefix = 0;
        for (int j = 0; j < i; ++j) prefix += fib[static_cast<std::size_t>(j)];
        // factor I_i -> I_{i-1}: identity left block, collapse of the i-th
        // fiber, identity right block
        std::vector<int> sizes;
        sizes.reserve(static_cast<std::size_t>(prefix + n - i + 1));
        for (int x = 0; x < prefix; ++x) sizes.push_back(1);
        sizes.push_back(fib[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j <= n; ++j) sizes.push_back(1);
        auto factor = SimplexMap::from_fibers(Ordinal{prefix + n - i}, sizes);
        if (!drop_identities || !factor.is_identity()) chain.push_back(std::move(factor));
    }
    return chain;
}

/// One-direction refinement: replaces prong s by the primitive factors of
/// its canonical chain, pulling the other prongs back to the intermediate
/// objects. An isomorphism prong has no primitive factors; by default it
/// contributes the claw itself as a single degenerate factor, while
/// primitive_only drops it (meaningful for nondegenerate cubes only). The
/// returned claws' cubes paste in direction s (in reverse list order) to
/// the cube of the input claw.
inline std::vector<Claw> decompose_prong(const Claw& c, int s, bool primitive_only = false) {
    const int n = c.base.n;
    const auto& f = c.prongs[static_cast<std::size_t>(s)];
    auto fib = f.fiber_sizes();
    if (f.is_identity()) return primitive_only ? std::vector<Claw>{} : std::vector<Claw>{c};
    std::vector<std::vector<int>> others;
    for (const auto& g : c.prongs) others.push_back(g.fiber_sizes());

    std::vector<Claw> out;
    for (int i = n; i >= 0; --i) {
        if (fib[static_cast<std::size_t>(i)] == 1) continue;
        int prefix = 0;
        for (int j = 0; j < i; ++j) prefix += fib[static_cast<std::size_t>(j)];
        const int base_size = prefix + n - i + 1;  // I_{i-1}
        Ordinal base{base_size - 1};
        // composite I_{i-1} -> [n] sends the first block via f and the tail
        // identically onto {i, ..., n}
        auto column_of = [&](int y) {
            if (y < prefix) return f(y);
            return i + (y - prefix);
        };
        std::vector<std::vector<int>> vecs(c.prongs.size());
        for (std::size_t t = 0; t < c.prongs.size(); ++t) {
            auto& v = vecs[t];
            v.resize(static_cast<std::size_t>(base_size));
            if (static_cast<int>(t) == s) {
                for (int y = 0; y < base_size; ++y) v[static_cast<std::size_t>(y)] = 1;
                v[static_cast<std::size_t>(prefix)] = fib[static_cast<std::size_t>(i)];
            } else {
                for (int y = 0; y < base_size; ++y)
                    v[static_cast<std::size_t>(y)] =
                        others[t][static_cast<std::size_t>(column_of(y))];
            }
        }
        out.push_back(Claw::from_fibers(base, vecs));
    }
    return out;
}

/// Pasting in direction s: the s = 1 face of lhs must equal the s = 0 face
/// of rhs; s-edges compose, the remaining structure is inherited.
inline Cube paste_in_direction(const Cube& lhs, const Cube& rhs, int s) {
    if (lhs.arms() != rhs.arms()) detail::fail("paste_in_direction: arm mismatch");
    const int k = lhs.arms();
    const std::uint32_t total = std::uint32_t{1} << k;
    const std::uint32_t bs = std::uint32_t{1} << s;
    for (std::uint32_t T = 0; T < total; ++T) {
        if (T & bs) continue;
        if (lhs.corner(T | bs) != rhs.corner(T))
            detail::fail("paste_in_direction: faces do not match");
    }
    std::vector<Ordinal> corners(total);
    std::vector<SimplexMap> edges(total * static_cast<std::uint32_t>(k),
                                  SimplexMap::identity(Ordinal{0}));
    for (std::uint32_t T = 0; T < total; ++T)
        corners[T] = (T & bs) ? rhs.corner(T) : lhs.corner(T);
    for (std::uint32_t T = 0; T < total; ++T)
        for (int t = 0; t < k; ++t) {
            if (T & (1u << t)) {
                edges[T * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(t)] =
                    SimplexMap::identity(corners[T]);  // unused slot
                continue;
            }
            SimplexMap e = [&]() {
                if (t == s) return compose(lhs.edge(T, s), rhs.edge(T, s));
                if (T & bs) return rhs.edge(T, t);
                return lhs.edge(T, t);
            }();
            edges[T * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(t)] = std::move(e);
        }
    return Cube(k, std::move(corners), std::move(edges));
}

/// Full decomposition into (pre)primitive claws: prongs are processed in
/// ascending order and each is refined by its canonical chain (descending
/// column); pre: the claw is strongly biCartesian in the chosen category.
/// For degenerate claws, primitive_only may legitimately return nothing.
inline std::vector<Claw> decompose_cube(const Claw& c, Cat cat, bool primitive_only = false) {
    if (!is_strongly_bicartesian(c, cat, Mode::criterion))
        detail::fail("decompose_cube: claw is not strongly biCartesian in the chosen category");
    std::vector<Claw> pieces = {c};
    for (int s = 0; s < c.arms(); ++s) {
        std::vector<Claw> next;
        for (const auto& piece : pieces) {
            auto sub = decompose_prong(piece, s, primitive_only);
            for (auto& cl : sub) next.push_back(std::move(cl));
        }
        pieces = std::move(next);
    }
    return pieces;
}

}  // namespace segal

#include "vck/profile.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vck {

void validate_boundaried(const BoundariedGraph& g) {
    VertexSet seen;
    for (VertexId v : g.boundary) {
        if (!g.core.has_vertex(v))
            throw std::invalid_argument("boundaried graph: boundary vertex not in graph");
        if (!seen.insert(v).second)
            throw std::invalid_argument("boundaried graph: duplicate boundary vertex");
        if (g.core.is_isolated(v))
            throw std::invalid_argument("boundaried graph: boundary vertex is isolated");
    }
}

bool is_strong(const BoundariedGraph& g) {
    VertexSet b(g.boundary.begin(), g.boundary.end());
    return is_independent_set(g.core, b);
}

Graph glue(const BoundariedGraph& g, const BoundariedGraph& h) {
    validate_boundaried(g);
    validate_boundaried(h);
    if (g.t() != h.t()) throw std::invalid_argument("glue: interface sizes differ");
    if (!is_strong(g)) throw std::invalid_argument("glue: left graph is not strongly boundaried");

    Graph out;
    std::map<VertexId, VertexId> gmap, hmap;
    for (VertexId v : g.core.vertices()) gmap[v] = out.add_vertex();
    for (int i = 0; i < h.t(); ++i) hmap[h.boundary[i]] = gmap.at(g.boundary[i]);
    for (VertexId v : h.core.vertices())
        if (!hmap.count(v)) hmap[v] = out.add_vertex();
    for (const auto& [u, v] : g.core.edges()) out.add_edge(gmap.at(u), gmap.at(v));
    for (const auto& [u, v] : h.core.edges()) out.add_edge(hmap.at(u), hmap.at(v));
    return out;
}

BoundariedGraph pendant_witness(int t) {
    BoundariedGraph w;
    std::vector<VertexId> xs, ps;
    for (int i = 0; i < t; ++i) xs.push_back(w.core.add_vertex());
    for (int i = 0; i < t; ++i) ps.push_back(w.core.add_vertex());
    for (int i = 0; i < t; ++i) w.core.add_edge(xs[i], ps[i]);
    w.boundary = xs;
    return w;
}

Profile compute_profile(const AttachmentPattern& p, int cap) {
    if (p.core.n > cap) throw std::invalid_argument("compute_profile: core exceeds the size cap");
    if (p.t < 1 || p.t > 8) throw std::invalid_argument("compute_profile: t out of range [1..8]");
    Profile out;
    out.t = p.t;
    out.table.assign(std::size_t(1) << p.t, Profile::kInfinity);
    for (std::uint32_t x = 0; x < (1u << p.t); ++x) {
        std::uint16_t forced = 0;
        for (int w = 0; w < p.core.n; ++w)
            if (p.attach[w] & ~x) forced |= std::uint16_t(1u << w);
        int best = Profile::kInfinity;
        for (std::uint32_t mask = 0; mask < (1u << p.core.n); ++mask) {
            if ((mask & forced) != forced) continue;
            if (!covers(p.core, static_cast<std::uint16_t>(mask))) continue;
            best = std::min(best, __builtin_popcount(mask));
        }
        out.table[x] = best;
    }
    return out;
}

Graph pattern_glue(const BoundariedGraph& witness, const AttachmentPattern& p,
                   std::vector<VertexId>& core_ids, std::vector<VertexSet>& class_sets) {
    validate_boundaried(witness);
    if (!is_strong(witness))
        throw std::invalid_argument("pattern_glue: witness is not strongly boundaried");
    if (witness.t() != p.t) throw std::invalid_argument("pattern_glue: interface sizes differ");

    VertexSet boundary(witness.boundary.begin(), witness.boundary.end());
    class_sets.assign(p.t, {});
    for (int i = 0; i < p.t; ++i) class_sets[i] = witness.core.neighbors(witness.boundary[i]);

    Graph out;
    std::map<VertexId, VertexId> wmap;
    for (VertexId v : witness.core.vertices())
        if (!boundary.count(v)) wmap[v] = out.add_vertex();
    for (const auto& [u, v] : witness.core.edges())
        if (!boundary.count(u) && !boundary.count(v)) out.add_edge(wmap.at(u), wmap.at(v));

    core_ids.clear();
    for (int i = 0; i < p.core.n; ++i) core_ids.push_back(out.add_vertex());
    for (int i = 0; i < p.core.n; ++i)
        for (int j = i + 1; j < p.core.n; ++j)
            if (p.core.has_edge(i, j)) out.add_edge(core_ids[i], core_ids[j]);
    for (int w = 0; w < p.core.n; ++w)
        for (int cls = 0; cls < p.t; ++cls)
            if ((p.attach[w] >> cls) & 1u)
                for (VertexId e : class_sets[cls]) out.add_edge(core_ids[w], wmap.at(e));

    for (auto& cs : class_sets) {
        VertexSet mapped;
        for (VertexId e : cs) mapped.insert(wmap.at(e));
        cs = std::move(mapped);
    }
    return out;
}

Profile verify_profile_against_witness(const AttachmentPattern& p,
                                       const BoundariedGraph& witness) {
    std::vector<VertexId> core_ids;
    std::vector<VertexSet> class_sets;
    Graph glued = pattern_glue(witness, p, core_ids, class_sets);

    auto total = static_cast<int>(glued.vertex_count());
    if (total > 20)
        throw std::invalid_argument("verify_profile_against_witness: glued graph too large");

    VertexSet glued_vertices = glued.vertices();
    std::vector<VertexId> order(glued_vertices.begin(), glued_vertices.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < total; ++i) index[order[i]] = i;
    std::vector<std::uint32_t> adj(total, 0);
    for (const auto& [u, v] : glued.edges()) {
        adj[index.at(u)] |= 1u << index.at(v);
        adj[index.at(v)] |= 1u << index.at(u);
    }
    std::uint32_t core_mask = 0;
    for (VertexId v : core_ids) core_mask |= 1u << index.at(v);
    std::vector<std::uint32_t> class_mask(p.t, 0);
    for (int i = 0; i < p.t; ++i)
        for (VertexId v : class_sets[i]) class_mask[i] |= 1u << index.at(v);

    Profile out;
    out.t = p.t;
    out.table.assign(std::size_t(1) << p.t, Profile::kInfinity);
    std::uint64_t limit = std::uint64_t(1) << total;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        auto s = static_cast<std::uint32_t>(bits);
        bool cover = true;
        for (int v = 0; v < total && cover; ++v)
            if (!((s >> v) & 1u) && (adj[v] & ~s)) cover = false;
        if (!cover) continue;
        std::uint32_t x = 0;
        for (int i = 0; i < p.t; ++i)
            if ((class_mask[i] & s) == class_mask[i]) x |= 1u << i;
        int inside = __builtin_popcount(s & core_mask);
        out.table[x] = std::min(out.table[x], inside);
    }
    return out;
}

std::optional<int> check_equivalence(const AttachmentPattern& p1, const AttachmentPattern& p2) {
    if (p1.t != p2.t) throw std::invalid_argument("check_equivalence: interface sizes differ");
    Profile a = compute_profile(p1);
    Profile b = compute_profile(p2);
    std::optional<int> c;
    for (std::size_t x = 0; x < a.table.size(); ++x) {
        if (a.table[x] == Profile::kInfinity || b.table[x] == Profile::kInfinity) {
            if (a.table[x] != b.table[x]) return std::nullopt;
            continue;
        }
        int diff = a.table[x] - b.table[x];
        if (!c) c = diff;
        if (*c != diff) return std::nullopt;
    }
    if (!c) c = 0;
    if (*c < 0) return std::nullopt;
    return c;
}

std::uint64_t discovery_candidate_estimate(int n, int t) {
    int bits = n * (n - 1) / 2 + n * t;
    if (bits >= 63) return ~std::uint64_t(0);
    return std::uint64_t(1) << bits;
}

void discover_replacements(const Profile& target, int n, int t,
                           const std::function<void(const DiscoveredReplacement&)>& sink,
                           std::uint64_t max_candidates) {
    if (n < 1 || n > 8) throw std::invalid_argument("discover_replacements: n out of range [1..8]");
    if (t < 1 || t > 8) throw std::invalid_argument("discover_replacements: t out of range [1..8]");
    if (target.t != t || target.table.size() != (std::size_t(1) << t))
        throw std::invalid_argument("discover_replacements: target profile has the wrong shape");
    std::uint64_t estimate = discovery_candidate_estimate(n, t);
    if (estimate > max_candidates) {
        std::ostringstream msg;
        msg << "discover_replacements: refusing enumeration of about " << estimate
            << " candidates (limit " << max_candidates << ")";
        throw std::invalid_argument(msg.str());
    }

    int edge_slots = n * (n - 1) / 2;
    std::uint64_t attach_limit = std::uint64_t(1) << (n * t);
    std::uint32_t tmask = (1u << t) - 1;

    for (std::uint64_t adj_bits = 0; adj_bits < (std::uint64_t(1) << edge_slots); ++adj_bits) {
        SmallGraph core = small_graph_from_edge_bits(n, adj_bits);
        // Covering masks with sizes, shared across all attachment maps.
        std::vector<std::pair<std::uint16_t, int>> cover_masks;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if (covers(core, static_cast<std::uint16_t>(mask)))
                cover_masks.emplace_back(static_cast<std::uint16_t>(mask),
                                         __builtin_popcount(mask));

        for (std::uint64_t att = 0; att < attach_limit; ++att) {
            AttachmentPattern cand;
            cand.core = core;
            cand.t = t;
            bool usable = true;
            for (int v = 0; v < n; ++v) {
                cand.attach[v] = std::uint8_t((att >> (v * t)) & tmask);
                if (cand.attach[v] == 0 && core.adj[v] == 0) usable = false;
            }
            if (!usable) continue;

            std::optional<int> shift;
            bool match = true;
            for (std::uint32_t x = 0; x < (1u << t) && match; ++x) {
                std::uint16_t forced = 0;
                for (int w = 0; w < n; ++w)
                    if (cand.attach[w] & ~x) forced |= std::uint16_t(1u << w);
                int best = Profile::kInfinity;
                for (const auto& [mask, size] : cover_masks)
                    if ((mask & forced) == forced && size < best) best = size;
                if (best == Profile::kInfinity || target.table[x] == Profile::kInfinity) {
                    match = target.table[x] == best;
                    continue;
                }
                int diff = target.table[x] - best;
                if (!shift) shift = diff;
                match = (*shift == diff) && *shift >= 0;
            }
            if (!match) continue;
            if (pattern_canonical_key(cand) !=
                std::pair<std::uint64_t, std::uint64_t>{cand.core.edge_bits(), attach_bits(cand)})
                continue;
            sink({cand, shift.value_or(0)});
        }
    }
}

std::vector<DiscoveredReplacement> discover_replacements(const Profile& target, int n, int t,
                                                         std::uint64_t max_candidates) {
    std::vector<DiscoveredReplacement> out;
    discover_replacements(
        target, n, t, [&](const DiscoveredReplacement& r) { out.push_back(r); }, max_candidates);
    return out;
}

void validate_embedding(const Graph& host, const PatternEmbedding& m) {
    const AttachmentPattern& p = m.pattern;
    if (static_cast<int>(m.core.size()) != p.core.n)
        throw std::invalid_argument("embedding: core size does not match the pattern");
    if (static_cast<int>(m.interface_sets.size()) != p.t)
        throw std::invalid_argument("embedding: wrong number of interface sets");
    VertexSet core_set(m.core.begin(), m.core.end());
    if (core_set.size() != m.core.size())
        throw std::invalid_argument("embedding: duplicate core vertex");
    for (VertexId v : m.core)
        if (!host.has_vertex(v)) throw std::invalid_argument("embedding: core vertex not in host");
    for (int i = 0; i < p.core.n; ++i)
        for (int j = i + 1; j < p.core.n; ++j)
            if (host.has_edge(m.core[i], m.core[j]) != p.core.has_edge(i, j))
                throw std::invalid_argument("embedding: not an induced occurrence of the pattern");
    for (const VertexSet& cls : m.interface_sets)
        for (VertexId v : cls) {
            if (!host.has_vertex(v))
                throw std::invalid_argument("embedding: interface vertex not in host");
            if (core_set.count(v))
                throw std::invalid_argument("embedding: interface set touches the core");
        }
    for (int w = 0; w < p.core.n; ++w) {
        VertexSet expected;
        for (int cls = 0; cls < p.t; ++cls)
            if ((p.attach[w] >> cls) & 1u)
                expected.insert(m.interface_sets[cls].begin(), m.interface_sets[cls].end());
        VertexSet actual;
        for (VertexId x : host.neighbors(m.core[w]))
            if (!core_set.count(x)) actual.insert(x);
        if (expected != actual)
            throw std::invalid_argument(
                "embedding: external neighborhood differs from the attachment classes");
    }
}

namespace {

std::optional<PatternEmbedding> match_deg4(const Graph& host, VertexId u, bool disjoint) {
    if (!host.has_vertex(u) || host.degree(u) != 4) return std::nullopt;
    std::vector<VertexId> nb(host.neighbors(u).begin(), host.neighbors(u).end());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (host.has_edge(nb[i], nb[j])) edges.emplace_back(i, j);
    if (edges.size() != 2) return std::nullopt;
    auto [i0, i1] = edges[0];
    auto [i2, i3] = edges[1];
    bool share = i0 == i2 || i0 == i3 || i1 == i2 || i1 == i3;

    std::array<int, 4> role{};
    if (disjoint) {
        if (share) return std::nullopt;
        role = {i0, i1, i2, i3};
    } else {
        if (!share) return std::nullopt;
        int mid = (i0 == i2 || i0 == i3) ? i0 : i1;
        int e0 = i0 == mid ? i1 : i0;
        int e1 = i2 == mid ? i3 : i2;
        role = {std::min(e0, e1), mid, std::max(e0, e1), 0 + 1 + 2 + 3 - mid - e0 - e1};
    }

    PatternEmbedding m;
    m.pattern = disjoint ? deg4_two_disjoint_edges_pattern() : deg4_path_two_edges_pattern();
    for (int i = 0; i < 4; ++i) m.core.push_back(nb[role[i]]);
    m.core.push_back(u);
    VertexSet closed = host.closed_neighborhood(u);
    m.interface_sets.assign(4, {});
    for (int i = 0; i < 4; ++i)
        for (VertexId w : host.neighbors(nb[role[i]]))
            if (!closed.count(w)) m.interface_sets[i].insert(w);
    return m;
}

}  // namespace

std::optional<PatternEmbedding> match_deg4_disjoint(const Graph& host, VertexId u) {
    return match_deg4(host, u, true);
}

std::optional<PatternEmbedding> match_deg4_path(const Graph& host, VertexId u) {
    return match_deg4(host, u, false);
}

Instance swap_equivalent(const Graph& host, const PatternEmbedding& m,
                         const AttachmentPattern& p2, int c, int k) {
    validate_embedding(host, m);
    auto cc = check_equivalence(m.pattern, p2);
    if (!cc || *cc != c)
        throw std::invalid_argument("swap_equivalent: patterns are not c-equivalent as claimed");
    if (k < c) throw std::invalid_argument("swap_equivalent: budget would become negative");

    Instance out{host, k - c};
    for (VertexId v : VertexSet(m.core.begin(), m.core.end())) out.graph.remove_vertex(v);
    std::vector<VertexId> fresh;
    for (int i = 0; i < p2.core.n; ++i) {
        VertexId f = out.graph.add_vertex();
        for (int j = 0; j < i; ++j)
            if (p2.core.has_edge(i, j)) out.graph.add_edge(f, fresh[j]);
        for (int cls = 0; cls < p2.t; ++cls)
            if ((p2.attach[i] >> cls) & 1u)
                for (VertexId e : m.interface_sets[cls]) out.graph.add_edge(f, e);
        fresh.push_back(f);
    }
    return out;
}

BoundariedGraph random_strong_witness(int t, std::uint64_t seed, int max_externals) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % std::uint64_t(hi - lo + 1));
    };
    BoundariedGraph w;
    for (int i = 0; i < t; ++i) w.boundary.push_back(w.core.add_vertex());
    int pool = pick(1, max_externals);
    std::vector<VertexId> ext;
    for (int i = 0; i < pool; ++i) ext.push_back(w.core.add_vertex());
    for (int i = 0; i < t; ++i) {
        int hits = pick(1, pool);
        std::vector<int> idx(pool);
        for (int j = 0; j < pool; ++j) idx[j] = j;
        for (int j = 0; j < hits; ++j) std::swap(idx[j], idx[pick(j, pool - 1)]);
        for (int j = 0; j < hits; ++j) w.core.add_edge(w.boundary[i], ext[idx[j]]);
    }
    for (int i = 0; i < pool; ++i)
        for (int j = i + 1; j < pool; ++j)
            if (pick(0, 2) == 0) w.core.add_edge(ext[i], ext[j]);
    return w;
}

std::string write_certificate(const Profile& target, const DiscoveredReplacement& r) {
    std::ostringstream os;
    os << "certificate\n";
    os << "t " << target.t << "\n";
    os << "c " << r.shift << "\n";
    os << "profile";
    for (int v : target.table) {
        if (v == Profile::kInfinity)
            os << " inf";
        else
            os << ' ' << v;
    }
    os << "\ncore " << r.pattern.core.n << "\nedges";
    bool any = false;
    for (int i = 0; i < r.pattern.core.n; ++i)
        for (int j = i + 1; j < r.pattern.core.n; ++j)
            if (r.pattern.core.has_edge(i, j)) {
                os << ' ' << i << '-' << j;
                any = true;
            }
    if (!any) os << " none";
    os << "\nattach";
    for (int i = 0; i < r.pattern.core.n; ++i) {
        os << ' ' << i << ':';
        bool first = true;
        for (int cls = 0; cls < target.t; ++cls)
            if ((r.pattern.attach[i] >> cls) & 1u) {
                os << (first ? "" : ",") << cls;
                first = false;
            }
        if (first) os << '-';
    }
    os << "\nend\n";
    return os.str();
}

Certificate parse_certificate(std::istream& in) {
    Certificate cert;
    std::string line, key;
    bool started = false, ended = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (!(ls >> key)) continue;
        if (!started) {
            if (key != "certificate")
                throw std::invalid_argument("certificate: missing 'certificate' header");
            started = true;
            continue;
        }
        if (key == "end") {
            ended = true;
            break;
        }
        if (key == "t") {
            ls >> cert.target.t;
            cert.pattern.t = cert.target.t;
        } else if (key == "c") {
            ls >> cert.shift;
        } else if (key == "profile") {
            if (cert.target.t < 1 || cert.target.t > 8)
                throw std::invalid_argument("certificate: profile before a valid t");
            cert.target.table.clear();
            std::string word;
            while (ls >> word)
                cert.target.table.push_back(word == "inf" ? Profile::kInfinity : std::stoi(word));
            if (cert.target.table.size() != std::size_t(1) << cert.target.t)
                throw std::invalid_argument("certificate: profile entry count mismatch");
        } else if (key == "core") {
            int n = 0;
            ls >> n;
            if (n < 1 || n > 12) throw std::invalid_argument("certificate: bad core size");
            cert.pattern.core.n = n;
        } else if (key == "edges") {
            std::string word;
            while (ls >> word) {
                if (word == "none") break;
                auto dash = word.find('-');
                if (dash == std::string::npos)
                    throw std::invalid_argument("certificate: malformed edge '" + word + "'");
                int a = std::stoi(word.substr(0, dash));
                int b = std::stoi(word.substr(dash + 1));
                if (a < 0 || b < 0 || a >= cert.pattern.core.n || b >= cert.pattern.core.n ||
                    a == b)
                    throw std::invalid_argument("certificate: edge endpoint out of range");
                cert.pattern.core.add_edge(a, b);
            }
        } else if (key == "attach") {
            std::string word;
            while (ls >> word) {
                auto colon = word.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("certificate: malformed attach entry");
                int v = std::stoi(word.substr(0, colon));
                if (v < 0 || v >= cert.pattern.core.n)
                    throw std::invalid_argument("certificate: attach vertex out of range");
                std::string classes = word.substr(colon + 1);
                if (classes == "-") continue;
                std::istringstream cs(classes);
                std::string piece;
                while (std::getline(cs, piece, ',')) {
                    int cls = std::stoi(piece);
                    if (cls < 0 || cls >= cert.target.t)
                        throw std::invalid_argument("certificate: attach class out of range");
                    cert.pattern.attach[v] |= std::uint8_t(1u << cls);
                }
            }
        } else {
            throw std::invalid_argument("certificate: unknown field '" + key + "'");
        }
    }
    if (!ended || cert.target.table.empty() || cert.pattern.core.n == 0)
        throw std::invalid_argument("certificate: incomplete");
    return cert;
}

}  // namespace vck

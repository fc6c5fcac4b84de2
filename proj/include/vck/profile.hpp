#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "vck/graph.hpp"
#include "vck/pattern.hpp"

namespace vck {

// Graph with t distinct non-isolated vertices labeled 1..t (by position in
// boundary). Strong when the boundary is an independent set.
struct BoundariedGraph {
    Graph core;
    std::vector<VertexId> boundary;

    int t() const { return static_cast<int>(boundary.size()); }
};

void validate_boundaried(const BoundariedGraph& g);
bool is_strong(const BoundariedGraph& g);

// Disjoint union with label-wise identification of boundary vertices; g must
// be strong and the interface sizes must match. |V| = |V(g)| + |V(h)| - t.
Graph glue(const BoundariedGraph& g, const BoundariedGraph& h);

// t pairwise disjoint edges x_i - p_i: the canonical strong witness whose
// class-i external neighborhood is the single pendant p_i.
BoundariedGraph pendant_witness(int t);

// Map from interface-coverage subsets X of [t] to the minimum number of core
// vertices any compatible cover must use. Entries are kInfinity only when no
// compatible cover exists for that X (never the case for finite cores under
// the forcing computation).
struct Profile {
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    int t = 0;
    std::vector<int> table;  // size 1 << t, indexed by the subset bitmask

    bool operator==(const Profile&) const = default;
};

// Forcing computation: table[X] = minimum core cover containing every vertex
// whose attachment set is not inside X (such a vertex has an uncovered
// external edge). Core capped at cap vertices.
Profile compute_profile(const AttachmentPattern& p, int cap = 12);

// The literal definition: glue p onto the witness (witness boundary vertex i
// is replaced by edges from each attached core vertex to its external
// neighborhood E_i), enumerate all vertex covers of the result, and minimize
// the core part per compatibility class {i : E_i inside S}. Must agree with
// compute_profile on realizable witnesses; the pendant witness realizes
// every X.
Profile verify_profile_against_witness(const AttachmentPattern& p, const BoundariedGraph& witness);

// Builds the glued graph used by verify_profile_against_witness; core_ids
// receives the vertices holding the pattern core, class_sets the external
// neighborhood of each interface class.
Graph pattern_glue(const BoundariedGraph& witness, const AttachmentPattern& p,
                   std::vector<VertexId>& core_ids, std::vector<VertexSet>& class_sets);

// The unique c >= 0 with profile(p1) = profile(p2) + c everywhere, if any.
std::optional<int> check_equivalence(const AttachmentPattern& p1, const AttachmentPattern& p2);

struct DiscoveredReplacement {
    AttachmentPattern pattern;
    int shift = 0;  // profile(target) - profile(pattern), constant over all X
};

// Streams every canonical n-vertex pattern with t interface classes whose
// profile differs from target by a constant c >= 0, in ascending
// (edge_bits, attach_bits) order. Vertices that are both edge-isolated and
// unattached are excluded. Refuses bounds whose raw enumeration size exceeds
// max_candidates (default 2^31), reporting the estimate.
void discover_replacements(const Profile& target, int n, int t,
                           const std::function<void(const DiscoveredReplacement&)>& sink,
                           std::uint64_t max_candidates = std::uint64_t(1) << 31);

std::vector<DiscoveredReplacement> discover_replacements(const Profile& target, int n, int t,
                                                         std::uint64_t max_candidates
                                                         = std::uint64_t(1) << 31);

// Estimated raw candidate count 2^(n(n-1)/2) * 2^(n t), saturating.
std::uint64_t discovery_candidate_estimate(int n, int t);

// An induced occurrence of a pattern in a host graph: core holds the host
// vertices in pattern order, interface_sets the actual external
// neighborhoods per class.
struct PatternEmbedding {
    AttachmentPattern pattern;
    std::vector<VertexId> core;
    std::vector<VertexSet> interface_sets;
};

void validate_embedding(const Graph& host, const PatternEmbedding& m);

// Occurrence of the two degree-four source patterns at vertex u, if u's
// neighborhood induces exactly the required two edges.
std::optional<PatternEmbedding> match_deg4_disjoint(const Graph& host, VertexId u);
std::optional<PatternEmbedding> match_deg4_path(const Graph& host, VertexId u);

// Replaces the matched core by p2: fresh vertices in p2 order, p2's internal
// edges, each attached to the union of its classes' external sets. Budget
// becomes k - c. Requires check_equivalence(m.pattern, p2) == c and a valid
// embedding.
Instance swap_equivalent(const Graph& host, const PatternEmbedding& m,
                         const AttachmentPattern& p2, int c, int k);

// Random strong witness for oracle checks: t boundary vertices, each
// attached to at least one of a small shared pool of external vertices that
// may also carry edges among themselves (so classes can intersect).
BoundariedGraph random_strong_witness(int t, std::uint64_t seed, int max_externals = 5);

// Textual certificate: target profile table, core adjacency, attachment map
// and the constant c. Sufficient for independent re-verification.
std::string write_certificate(const Profile& target, const DiscoveredReplacement& r);
struct Certificate {
    Profile target;
    AttachmentPattern pattern;
    int shift = 0;
};
Certificate parse_certificate(std::istream& in);

}  // namespace vck

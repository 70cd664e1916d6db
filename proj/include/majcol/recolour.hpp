#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/random.hpp"
#include "majcol/types.hpp"

namespace majcol {

struct MajorityStatus {
  bool is_majority = true;
  std::uint32_t same_count = 0;
  ColourCounts counts{};
};

/// Out-neighbour colour tally of v under c.
ColourCounts out_colour_counts(const Digraph& d, const Colouring3& c, Vertex v);

/// At most half (non-strict) of the out-neighbours share v's colour.
MajorityStatus vertex_majority_status(const Digraph& d, const Colouring3& c, Vertex v);

/// True iff count > deg/2 (strict), using integers.
constexpr bool more_than_half(std::uint64_t count, std::uint64_t deg) { return 2 * count > deg; }

/// The colour that goes from <= deg/2 to > deg/2, if any.
std::optional<Colour> overtake_from_counts(const ColourCounts& before, const ColourCounts& after,
                                           std::uint64_t deg);
std::optional<Colour> overtake_colour(const Digraph& d, const Colouring3& c_prev,
                                      const Colouring3& c_cur, Vertex v);

enum class RecolourMode { Simple, PersonalityChanging };
enum class Personality : std::uint8_t { Paranoid, Thoughtful };

/// What a single vertex remembers in the personality-changing process.
/// `last_excluded` is the colour that was ruled out at the vertex's most
/// recent resampling (its own colour at step 1, the overtaking colour later);
/// it is present iff the vertex has ever resampled.
struct VertexMemory {
  Colour colour = Colour::One;
  Personality personality = Personality::Thoughtful;
  std::optional<Colour> last_excluded;

  bool ever_resampled() const { return last_excluded.has_value(); }
};

/// Counts of personality transitions at overtaking events.
struct PersonalityStats {
  std::uint64_t paranoid_to_thoughtful = 0;
  std::uint64_t thoughtful_to_thoughtful = 0;
  std::uint64_t thoughtful_to_paranoid = 0;
  // Events seen by thoughtful vertices, split by the p* branch.
  std::uint64_t thoughtful_fresh = 0;
  std::uint64_t thoughtful_excluded_match = 0;
  std::uint64_t thoughtful_other = 0;
};

/// Uniform colour different from `excluded`.
Colour draw_other_colour(Colour excluded, Rng& rng);

/// Time-1 initial state of one vertex.
VertexMemory initial_memory(Rng& rng);

/// Step-1 rule: a non-majority vertex resamples away from its own colour.
void initial_flush(VertexMemory& m, Rng& rng);

/// Reaction to `gamma` overtaking (steps t >= 2, personality-changing mode).
/// Returns true if the vertex resampled.
bool react_to_overtake(VertexMemory& m, Colour gamma, Rng& rng, PersonalityStats* stats = nullptr);

struct RecolourState {
  Colouring3 colours;
  std::vector<Personality> personality;
  /// Colour excluded at the last resampling; nullopt iff never resampled.
  std::vector<std::optional<Colour>> last_excluded;
  /// Current time index; t = 1 is the initial colouring.
  std::size_t t = 1;

  bool ever_changed(Vertex v) const { return last_excluded[v].has_value(); }
};

struct TraceRecord {
  std::size_t t = 0;
  std::size_t nonmajority = 0;
  std::size_t changed = 0;
  std::array<std::size_t, 3> class_sizes{};

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct ProcessTrace {
  std::vector<TraceRecord> records;
};

struct RecolourResult {
  Colouring3 final_colours;
  ProcessTrace trace;
  RecolourState state;
  PersonalityStats personality_stats;
  /// Non-majority vertices at some t >= 2 whose own colour was not the
  /// overtaking colour at that time. Always 0 in personality-changing mode.
  std::size_t soundness_violations = 0;
};

/// Runs `steps` recolouring steps from a uniform random colouring. The trace
/// holds one record per time 1..steps+1.
RecolourResult run_recolouring(const Digraph& d, RecolourMode mode, std::size_t steps, Seed seed);

/// Same, from a given initial colouring (personalities still drawn from seed).
RecolourResult run_recolouring_from(const Digraph& d, RecolourMode mode, std::size_t steps,
                                    Seed seed, const Colouring3& initial);

/// Defect of a 2-colouring: per vertex max(same - opposite, 0).
struct DefectResult {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> per_vertex;
};
DefectResult defect_2col(const Digraph& d, const Partition2& part);

}  // namespace majcol

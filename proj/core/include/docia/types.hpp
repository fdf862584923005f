#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace docia {

// Identifies one audio segment: document (talk) id plus 1-based position.
struct SegmentId {
    std::string doc_id;
    int index = 0;

    friend bool operator==(const SegmentId&, const SegmentId&) = default;
    friend auto operator<=>(const SegmentId&, const SegmentId&) = default;
};

// Outcome of one refinement determination.
struct GateDecision {
    double similarity = 0.0;
    bool accepted = false;
    double threshold_used = 0.0;
    // Synthetic decision recorded when the stage degraded (parse/backend
    // failure) instead of being evaluated; exempt from the
    // accepted == (similarity >= threshold) invariant.
    bool fallback = false;
};

// Per-segment state accumulated across the four pipeline stages.
struct SegmentRecord {
    SegmentId id;
    std::string draft_transcript;
    std::string refined_transcript;
    std::string draft_translation;
    std::string final_translation;
    std::optional<GateDecision> asr_gate;
    std::optional<GateDecision> mt_gate;
    std::map<std::string, double> stage_timings_ms;
    std::map<std::string, std::string> context_fingerprints;
    std::vector<std::string> failures;
    int llm_calls = 0;
    bool skipped = false; // empty draft: no stage ran
    bool fatal = false;   // translation failed even after fallback
};

struct InputSegment {
    int index = 0;
    std::string draft_transcript;
    std::optional<std::string> ref_transcript;
    std::optional<std::string> ref_translation;
};

// One spoken document; segment indices are contiguous 1..N.
struct Document {
    std::string doc_id;
    std::vector<InputSegment> segments;
};

} // namespace docia

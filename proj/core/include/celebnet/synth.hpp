#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "celebnet/classify.hpp"
#include "celebnet/corpus.hpp"
#include "celebnet/lexicon.hpp"

namespace celebnet {

/// Knobs for the deterministic fixture generator. Lexicon boosts raise the
/// rate of signal-category words in a bucket's tweets; engagement boosts
/// raise the per-user engagement probability with that bucket's
/// celebrities.
struct SynthSpec {
    struct Effect {
        double lexicon_boost = 0.0;
        double engagement_boost = 0.0;
    };

    int n_celebrities = 300;
    int n_users = 500;
    std::uint64_t seed = 42;
    std::map<Bucket, Effect> planted_effects;
};

struct SynthResult {
    Corpus corpus;
    std::vector<BucketLabel> labels;
};

/// JSON {"n_celebrities", "n_users", "seed", "planted_effects":
/// {"HIGH": {"lexicon_boost", "engagement_boost"}, ...}}; omitted buckets
/// get zero boosts.
SynthSpec load_synth_spec(const std::string& path);

/// Boost levels that plant a clear linguistic signal and a weaker network
/// signal.
SynthSpec default_synth_spec();

/// Deterministic corpus with bucket-conditioned token and engagement
/// distributions. Follower ranges per intended bucket are disjoint, so the
/// returned labels coincide with assign_buckets over the roster.
SynthResult generate(const SynthSpec& spec, const Lexicon& lexicon);

} // namespace celebnet

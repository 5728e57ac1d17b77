#include "celebnet/pos_tagger.hpp"

#include <cctype>

namespace celebnet {

namespace {

const char* const kPron[] = {
    "i",       "me",      "my",       "mine",   "myself",     "we",     "us",
    "our",     "ours",    "ourselves", "you",   "your",       "yours",  "yourself",
    "he",      "him",     "his",      "himself", "she",       "her",    "hers",
    "herself", "it",      "its",      "itself", "they",       "them",   "their",
    "theirs",  "themselves", "who",   "whom",   "whose",      "which",  "what",
    "someone", "somebody", "something", "anyone", "anybody",  "anything",
    "everyone", "everybody", "everything", "nobody", "nothing", "none"};

const char* const kDet[] = {"a",     "an",      "the",   "this", "that",  "these",
                            "those", "each",    "every", "some", "any",   "no",
                            "all",   "both",    "either", "neither", "several",
                            "enough", "such"};

const char* const kAdp[] = {"in",      "on",     "at",      "by",      "for",    "with",
                            "about",   "against", "between", "among",  "into",   "through",
                            "during",  "before", "after",   "above",   "below",  "to",
                            "from",    "up",     "down",    "of",      "off",    "over",
                            "under",   "near",   "behind",  "beyond",  "within", "without",
                            "upon",    "toward", "towards", "across",  "along",  "around",
                            "outside", "inside", "despite", "per",     "via"};

const char* const kConj[] = {"and",    "or",    "but",   "nor",     "so",    "yet",
                             "because", "although", "though", "while", "whereas",
                             "unless", "until", "since", "if",      "than",  "whether",
                             "once",   "whenever", "wherever"};

const char* const kVerb[] = {
    "be",    "am",    "is",    "are",   "was",   "were",  "been",  "being", "do",
    "does",  "did",   "done",  "doing", "have",  "has",   "had",   "having", "will",
    "would", "shall", "should", "can",  "could", "may",   "might", "must",  "ought",
    "get",   "got",   "gets",  "go",    "goes",  "went",  "gone",  "make",  "made",
    "makes", "say",   "said",  "says",  "see",   "saw",   "seen",  "sees",  "know",
    "knew",  "known", "knows", "think", "thought", "take", "took",  "taken", "takes",
    "come",  "came",  "comes", "want",  "wants", "let",   "lets",  "run",   "ran",
    "runs",  "give",  "gave",  "given", "keep",  "kept",  "feel",  "felt",  "tell",
    "told",  "look",  "looks", "find",  "found", "put",   "bring", "brought"};

const char* const kAdv[] = {
    "very",   "too",     "also",    "just",   "now",     "then",   "here",   "there",
    "soon",   "always",  "never",   "often",  "sometimes", "usually", "again", "quite",
    "rather", "maybe",   "perhaps", "really", "well",    "almost", "already", "still",
    "even",   "ever",    "far",     "away",   "back",    "only",   "more",   "most",
    "less",   "least",   "today",   "tomorrow", "yesterday", "together", "instead",
    "once",   "twice",   "everywhere", "somewhere", "anywhere", "nowhere"};

const char* const kAdj[] = {
    "good",  "bad",   "big",   "small", "new",   "old",   "great", "high",  "low",
    "long",  "short", "own",   "other", "same",  "few",   "many",  "much",  "little",
    "right", "wrong", "sure",  "able",  "best",  "better", "worst", "worse", "last",
    "first", "next",  "true",  "false", "happy", "sad",   "nice",  "free",  "full",
    "hot",   "cold",  "young", "real",  "late",  "early", "hard",  "fast",  "main"};

const char* const kPrt[] = {"not", "t", "s"};

} // namespace

PosTagger::PosTagger()
    : tagset_{"VERB", "NOUN", "PRON", "ADJ", "ADV", "ADP",
              "CONJ", "DET",  "NUM",  "PRT", "X",   "."} {
    auto add = [this](const char* const* words, std::size_t count, const char* tag) {
        for (std::size_t i = 0; i < count; ++i) {
            closed_class_.emplace(words[i], tag);
        }
    };
    add(kPron, std::size(kPron), "PRON");
    add(kDet, std::size(kDet), "DET");
    add(kAdp, std::size(kAdp), "ADP");
    add(kConj, std::size(kConj), "CONJ");
    add(kVerb, std::size(kVerb), "VERB");
    add(kAdv, std::size(kAdv), "ADV");
    add(kAdj, std::size(kAdj), "ADJ");
    add(kPrt, std::size(kPrt), "PRT");

    // First match wins; longer suffixes come first.
    suffix_rules_ = {
        {"ness", "NOUN"}, {"ment", "NOUN"}, {"tion", "NOUN"}, {"sion", "NOUN"},
        {"ship", "NOUN"}, {"hood", "NOUN"}, {"ance", "NOUN"}, {"ence", "NOUN"},
        {"able", "ADJ"},  {"ible", "ADJ"},  {"less", "ADJ"},  {"ity", "NOUN"},
        {"ism", "NOUN"},  {"ist", "NOUN"},  {"dom", "NOUN"},  {"ure", "NOUN"},
        {"ery", "NOUN"},  {"ous", "ADJ"},   {"ful", "ADJ"},   {"ive", "ADJ"},
        {"ish", "ADJ"},   {"ian", "ADJ"},   {"est", "ADJ"},   {"ize", "VERB"},
        {"ise", "VERB"},  {"ify", "VERB"},  {"ate", "VERB"},  {"ing", "VERB"},
        {"ly", "ADV"},    {"ed", "VERB"},   {"al", "ADJ"},    {"ic", "ADJ"},
        {"er", "NOUN"},   {"or", "NOUN"},   {"s", "NOUN"},
    };
}

std::string PosTagger::tag(const std::string& token) const {
    if (token.empty()) {
        return "X";
    }
    bool all_digits = true;
    bool any_digit = false;
    for (char c : token) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            any_digit = true;
        } else {
            all_digits = false;
        }
    }
    if (all_digits) {
        return "NUM";
    }
    if (any_digit) {
        return "X";
    }
    if (auto it = closed_class_.find(token); it != closed_class_.end()) {
        return it->second;
    }
    for (const auto& [suffix, tag] : suffix_rules_) {
        if (token.size() >= suffix.size() + 2 &&
            token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
            return tag;
        }
    }
    return "NOUN";
}

} // namespace celebnet

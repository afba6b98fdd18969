#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "weblog/feed.hpp"

namespace weblog {

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

struct StopWordSet {
    std::unordered_set<std::string> words;

    bool contains(const std::string& w) const { return words.count(w) != 0; }

    // One word per line, lowercased, blanks skipped.
    static StopWordSet from_text(std::string_view raw);
};

// Location weights for word counting. The feed description dominates, post
// titles count less, post bodies least.
struct WeightConfig {
    long long description_weight = 10;
    long long post_title_weight = 3;
    long long word_weight = 1;
};

// token -> accumulated weight; ordered so iteration is deterministic.
using WordWeights = std::map<std::string, long long>;

// blog title -> word weights; ordered for deterministic downstream layout.
struct BlogsContent {
    std::map<std::string, WordWeights> entries;
};

// Splits on maximal runs of non-alphanumeric characters (ASCII) and
// lowercases. Multi-byte UTF-8 sequences act as separators, so compound
// marks like "AT&T" fragment into their alphanumeric pieces.
std::vector<std::string> separate_words(std::string_view text);

// Counts stemmed words of one feed with location weights. Stop words are
// filtered on the raw token, before stemming. The blog title itself is
// never tokenized.
WordWeights word_count(const FeedDocument& doc, const StopWordSet& stop,
                       const WeightConfig& w = {});

// Loads, parses and counts every listed source. Sources that fail to load
// or parse are reported to `diag` and skipped; duplicate titles keep the
// last occurrence. Throws EmptyCorpus when nothing survives.
BlogsContent get_feeds_content(const FeedList& list, const StopWordSet& stop,
                               const WeightConfig& w = {}, bool allow_network = false,
                               std::ostream* diag = nullptr);

// Same counting and duplicate-title handling over an already-parsed corpus.
BlogsContent content_from_corpus(const std::vector<FeedDocument>& docs, const StopWordSet& stop,
                                 const WeightConfig& w = {}, std::ostream* diag = nullptr);

}  // namespace weblog

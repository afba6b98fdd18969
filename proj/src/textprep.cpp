#include "weblog/textprep.hpp"

#include <cctype>
#include <ostream>

#include "weblog/porter.hpp"

namespace weblog {

namespace {

bool is_word_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u < 0x80 && std::isalnum(u);
}

void count_tokens(WordWeights& counts, const std::string& text, const StopWordSet& stop,
                  long long weight) {
    if (weight == 0) return;
    for (std::string& token : separate_words(text)) {
        if (stop.contains(token)) continue;
        counts[porter_stem(token)] += weight;
    }
}

}  // namespace

StopWordSet StopWordSet::from_text(std::string_view raw) {
    StopWordSet set;
    std::size_t start = 0;
    while (start <= raw.size()) {
        auto end = raw.find('\n', start);
        if (end == std::string_view::npos) end = raw.size();
        std::string_view line = raw.substr(start, end - start);
        start = end + 1;
        std::string word;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
        if (!word.empty()) set.words.insert(std::move(word));
    }
    return set;
}

std::vector<std::string> separate_words(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_word_char(c)) {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

WordWeights word_count(const FeedDocument& doc, const StopWordSet& stop, const WeightConfig& w) {
    WordWeights counts;
    count_tokens(counts, doc.description, stop, w.description_weight);
    for (const std::string& title : doc.post_titles)
        count_tokens(counts, title, stop, w.post_title_weight);
    for (const std::string& summary : doc.summaries)
        count_tokens(counts, summary, stop, w.word_weight);
    return counts;
}

BlogsContent get_feeds_content(const FeedList& list, const StopWordSet& stop,
                               const WeightConfig& w, bool allow_network, std::ostream* diag) {
    std::vector<FeedDocument> docs;
    for (const std::string& locator : list.entries) {
        try {
            docs.push_back(parse_feed(load_source(locator, allow_network)));
        } catch (const Error& e) {
            if (diag) *diag << "skipping " << locator << ": " << e.what() << "\n";
        }
    }
    return content_from_corpus(docs, stop, w, diag);
}

BlogsContent content_from_corpus(const std::vector<FeedDocument>& docs, const StopWordSet& stop,
                                 const WeightConfig& w, std::ostream* diag) {
    BlogsContent content;
    for (const FeedDocument& doc : docs) {
        if (diag && content.entries.count(doc.title))
            *diag << "duplicate blog title \"" << doc.title << "\", keeping the newer feed\n";
        content.entries[doc.title] = word_count(doc, stop, w);
    }
    if (content.entries.empty()) throw EmptyCorpus("no feeds could be processed");
    return content;
}

}  // namespace weblog

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weblog/errors.hpp"

namespace weblog {

class MalformedFeed : public Error {
public:
    using Error::Error;
};

class MissingTitle : public Error {
public:
    using Error::Error;
};

class SourceUnavailable : public Error {
public:
    using Error::Error;
};

class EmptyFeedList : public Error {
public:
    using Error::Error;
};

class CorruptRecord : public Error {
public:
    CorruptRecord(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// One parsed blog feed. Titles and summaries are plain text: markup is
// stripped and entities are decoded before storage.
struct FeedDocument {
    std::string title;
    std::string description;
    std::vector<std::string> post_titles;
    std::vector<std::string> summaries;

    friend bool operator==(const FeedDocument&, const FeedDocument&) = default;
};

// Ordered feed source locators (file paths or URLs), duplicates removed.
struct FeedList {
    std::vector<std::string> entries;
};

// Parses an RSS 2.0 or Atom document. Only the fields the pipeline needs
// are extracted: feed title, feed description/subtitle, per-item titles and
// per-item description/summary (Atom falls back to entry content).
FeedDocument parse_feed(std::string_view raw);

// One locator per non-blank line; '#' lines are comments; duplicates keep
// the first occurrence. Throws EmptyFeedList when nothing usable remains.
FeedList read_feed_list(std::string_view raw);

// Reads a local file, or performs an HTTP GET when the locator is a URL and
// networking is allowed. Failures throw SourceUnavailable so callers can
// skip the entry and move on.
std::string load_source(const std::string& locator, bool allow_network = false);

// Line-delimited corpus persistence; read(write(docs)) == docs.
std::string write_corpus(const std::vector<FeedDocument>& docs);
std::vector<FeedDocument> read_corpus(std::string_view raw);

// Removes <...> spans. Idempotent.
std::string strip_tags(std::string_view text);

std::string decode_entities(std::string_view text);

}  // namespace weblog

#include "weblog/feed.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "xml.hpp"

namespace weblog {

namespace {

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // also trims the front
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) out.push_back(' ');
            out.push_back(c);
            in_ws = false;
        }
    }
    return out;
}

// Shared cleanup for every extracted field: embedded markup (escaped HTML
// or CDATA payloads) is stripped, leftover entities decoded, whitespace
// collapsed.
std::string normalize_text(const std::string& raw) {
    return collapse_whitespace(decode_entities(strip_tags(raw)));
}

std::string node_text(const xml::Node* n) {
    return n ? normalize_text(n->deep_text()) : std::string();
}

FeedDocument from_rss(const xml::Node& root) {
    const xml::Node* channel = root.child("channel");
    if (!channel) throw MalformedFeed("rss document has no channel element");
    FeedDocument doc;
    doc.title = node_text(channel->child("title"));
    doc.description = node_text(channel->child("description"));
    for (const xml::Node* item : channel->children_named("item")) {
        doc.post_titles.push_back(node_text(item->child("title")));
        doc.summaries.push_back(node_text(item->child("description")));
    }
    return doc;
}

FeedDocument from_atom(const xml::Node& root) {
    FeedDocument doc;
    doc.title = node_text(root.child("title"));
    doc.description = node_text(root.child("subtitle"));
    for (const xml::Node* entry : root.children_named("entry")) {
        doc.post_titles.push_back(node_text(entry->child("title")));
        const xml::Node* body = entry->child("summary");
        if (!body) body = entry->child("content");
        doc.summaries.push_back(node_text(body));
    }
    return doc;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_url(const std::string& locator) {
    return locator.rfind("http://", 0) == 0 || locator.rfind("https://", 0) == 0;
}

}  // namespace

namespace detail {
std::string fetch_url(const std::string& url);  // http.cpp
}

FeedDocument parse_feed(std::string_view raw) {
    xml::Node root;
    try {
        root = xml::parse(raw);
    } catch (const xml::ParseError& e) {
        throw MalformedFeed(e.what());
    }
    FeedDocument doc;
    if (root.name == "rss") {
        doc = from_rss(root);
    } else if (root.name == "feed") {
        doc = from_atom(root);
    } else {
        throw MalformedFeed("unrecognized root element <" + root.name + ">");
    }
    if (doc.title.empty()) throw MissingTitle("feed has no title");
    return doc;
}

FeedList read_feed_list(std::string_view raw) {
    FeedList list;
    std::unordered_set<std::string> seen;
    std::size_t start = 0;
    while (start <= raw.size()) {
        auto end = raw.find('\n', start);
        if (end == std::string_view::npos) end = raw.size();
        std::string line = trim(raw.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;
        if (seen.insert(line).second) list.entries.push_back(std::move(line));
    }
    if (list.entries.empty()) throw EmptyFeedList("feed list has no usable entries");
    return list;
}

std::string load_source(const std::string& locator, bool allow_network) {
    if (is_url(locator)) {
        if (!allow_network)
            throw SourceUnavailable("networking disabled, cannot fetch " + locator);
        return detail::fetch_url(locator);
    }
    std::ifstream in(locator, std::ios::binary);
    if (!in) throw SourceUnavailable("cannot open " + locator);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw SourceUnavailable("error reading " + locator);
    return buf.str();
}

std::string write_corpus(const std::vector<FeedDocument>& docs) {
    std::string out;
    for (const FeedDocument& d : docs) {
        nlohmann::ordered_json j{{"title", d.title},
                                 {"description", d.description},
                                 {"post_titles", d.post_titles},
                                 {"summaries", d.summaries}};
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<FeedDocument> read_corpus(std::string_view raw) {
    std::vector<FeedDocument> docs;
    std::size_t start = 0, lineno = 0;
    while (start <= raw.size()) {
        auto end = raw.find('\n', start);
        if (end == std::string_view::npos) end = raw.size();
        std::string_view line = raw.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw CorruptRecord(lineno, "not a JSON record");
        try {
            FeedDocument d;
            d.title = j.at("title").get<std::string>();
            d.description = j.at("description").get<std::string>();
            d.post_titles = j.at("post_titles").get<std::vector<std::string>>();
            d.summaries = j.at("summaries").get<std::vector<std::string>>();
            docs.push_back(std::move(d));
        } catch (const nlohmann::json::exception& e) {
            throw CorruptRecord(lineno, e.what());
        }
    }
    return docs;
}

std::string strip_tags(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '<') {
            auto close = text.find('>', i + 1);
            if (close == std::string_view::npos) break;  // unterminated tag: drop the rest
            i = close + 1;
        } else {
            out.push_back(text[i++]);
        }
    }
    return out;
}

std::string decode_entities(std::string_view text) { return xml::decode_entities(text); }

}  // namespace weblog

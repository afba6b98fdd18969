#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include <doctest.h>

#include "weblog/feed.hpp"

using namespace weblog;

namespace {

const char* kRssOneItem =
    "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
    "<rss version=\"2.0\"><channel>\n"
    "  <title>T</title>\n"
    "  <description>D</description>\n"
    "  <item><title>P</title><description>S</description></item>\n"
    "</channel></rss>\n";

std::string temp_file(const std::string& content) {
    static int counter = 0;
    std::string path = "feed_test_tmp_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("rss document maps channel and item fields") {
    FeedDocument doc = parse_feed(kRssOneItem);
    CHECK(doc.title == "T");
    CHECK(doc.description == "D");
    REQUIRE(doc.post_titles.size() == 1);
    CHECK(doc.post_titles[0] == "P");
    REQUIRE(doc.summaries.size() == 1);
    CHECK(doc.summaries[0] == "S");
}

TEST_CASE("atom document with no entries") {
    FeedDocument doc = parse_feed(
        "<feed xmlns=\"http://www.w3.org/2005/Atom\">"
        "<title>Atom Blog</title><subtitle>About things</subtitle></feed>");
    CHECK(doc.title == "Atom Blog");
    CHECK(doc.description == "About things");
    CHECK(doc.post_titles.empty());
    CHECK(doc.summaries.empty());
}

TEST_CASE("atom entries prefer summary and fall back to content") {
    FeedDocument doc = parse_feed(
        "<feed><title>A</title>"
        "<entry><title>one</title><summary>s1</summary><content>c1</content></entry>"
        "<entry><title>two</title><content>c2</content></entry>"
        "</feed>");
    REQUIRE(doc.summaries.size() == 2);
    CHECK(doc.summaries[0] == "s1");
    CHECK(doc.summaries[1] == "c2");
}

TEST_CASE("markup inside item descriptions is stripped and entities decoded") {
    FeedDocument doc = parse_feed(
        "<rss><channel><title>T</title>"
        "<item><description>a <b>bold</b> &amp; word</description></item>"
        "</channel></rss>");
    REQUIRE(doc.summaries.size() == 1);
    CHECK(doc.summaries[0] == "a bold & word");

    // the same payload escaped inside CDATA normalizes identically
    FeedDocument doc2 = parse_feed(
        "<rss><channel><title>T</title>"
        "<item><description><![CDATA[a <b>bold</b> &amp; word]]></description></item>"
        "</channel></rss>");
    CHECK(doc2.summaries[0] == "a bold & word");
}

TEST_CASE("numeric character references decode to utf-8") {
    FeedDocument doc = parse_feed(
        "<rss><channel><title>caf&#233; &#x263a;</title></channel></rss>");
    CHECK(doc.title == "caf\xC3\xA9 \xE2\x98\xBA");
}

TEST_CASE("malformed feeds are rejected") {
    CHECK_THROWS_AS(parse_feed("not xml at all"), MalformedFeed);
    CHECK_THROWS_AS(parse_feed("<html><body>page</body></html>"), MalformedFeed);
    CHECK_THROWS_AS(parse_feed("<rss><channel><title>T</title>"), MalformedFeed);
    CHECK_THROWS_AS(parse_feed("<rss><item/></rss>"), MalformedFeed);  // no channel
    CHECK_THROWS_AS(parse_feed("<rss><channel><description>D</description></channel></rss>"),
                    MissingTitle);
    CHECK_THROWS_AS(parse_feed("<rss><channel><title>  </title></channel></rss>"), MissingTitle);
}

TEST_CASE("feed list skips blanks and comments and deduplicates") {
    CHECK(read_feed_list("a.xml\n\nb.xml\n").entries == std::vector<std::string>{"a.xml", "b.xml"});
    CHECK(read_feed_list("a.xml\na.xml\n").entries == std::vector<std::string>{"a.xml"});
    CHECK(read_feed_list("# comment\nx.xml").entries == std::vector<std::string>{"x.xml"});
    CHECK(read_feed_list("  padded.xml  \n").entries == std::vector<std::string>{"padded.xml"});
    CHECK_THROWS_AS(read_feed_list("\n# only comments\n\n"), EmptyFeedList);
}

TEST_CASE("load_source reads files and gates urls") {
    std::string path = temp_file("payload");
    CHECK(load_source(path) == "payload");
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_source("no_such_file_here.xml"), SourceUnavailable);
    CHECK_THROWS_AS(load_source("http://example.com/feed.xml", false), SourceUnavailable);
}

TEST_CASE("corpus round-trips arbitrary documents") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> charkind(0, 8);
    auto random_text = [&](bool allow_empty) {
        static const char* pieces[] = {"word",  "x y z", "caf\xC3\xA9", "a,b\"c", "line",
                                       "\xE2\x98\xBA", "tab\tchar", "9", "longer text body"};
        int n = len(rng) + (allow_empty ? 0 : 1);
        std::string out;
        for (int i = 0; i < n; ++i) {
            if (i) out.push_back(' ');
            out += pieces[charkind(rng)];
        }
        return out;
    };
    std::vector<FeedDocument> docs;
    for (int d = 0; d < 25; ++d) {
        FeedDocument doc;
        doc.title = random_text(false);
        doc.description = random_text(true);
        int posts = len(rng);
        for (int p = 0; p < posts; ++p) {
            doc.post_titles.push_back(random_text(true));
            doc.summaries.push_back(random_text(true));
        }
        docs.push_back(std::move(doc));
    }
    CHECK(read_corpus(write_corpus(docs)) == docs);
    CHECK(read_corpus(write_corpus({})) == std::vector<FeedDocument>{});
}

TEST_CASE("corrupt corpus records carry their line number") {
    std::string good = write_corpus({FeedDocument{"t", "", {}, {}}});
    std::string bad = good + "{\"description\":\"no title\",\"post_titles\":[],\"summaries\":[]}\n";
    try {
        read_corpus(bad);
        FAIL("expected CorruptRecord");
    } catch (const CorruptRecord& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(read_corpus("not json\n"), CorruptRecord);
}

TEST_CASE("strip_tags removes markup and is idempotent") {
    CHECK(strip_tags("a <b>bold</b> word") == "a bold word");
    CHECK(strip_tags("no tags") == "no tags");
    CHECK(strip_tags("<p>unterminated <span") == "unterminated ");
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> pick(0, 6);
    static const char* pieces[] = {"<b>", "</i>", "text", "&amp;", "<", ">", " mixed "};
    for (int trial = 0; trial < 50; ++trial) {
        std::string s;
        for (int i = 0; i < 8; ++i) s += pieces[pick(rng)];
        std::string once = strip_tags(s);
        CHECK(strip_tags(once) == once);
    }
}

TEST_CASE("parse_feed is deterministic") {
    CHECK(parse_feed(kRssOneItem) == parse_feed(kRssOneItem));
}

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "weblog/porter.hpp"
#include "weblog/textprep.hpp"

using namespace weblog;

namespace {

StopWordSet make_stop(std::initializer_list<std::string> words) {
    StopWordSet s;
    for (const auto& w : words) s.words.insert(w);
    return s;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::ofstream out(name, std::ios::binary);
    out << content;
    return name;
}

}  // namespace

TEST_CASE("separate_words splits on non-alphanumeric runs") {
    CHECK(separate_words("Hello, World!") == std::vector<std::string>{"hello", "world"});
    CHECK(separate_words("AT&T") == std::vector<std::string>{"at", "t"});
    CHECK(separate_words("") == std::vector<std::string>{});
    CHECK(separate_words("C++ and Yahoo!") == std::vector<std::string>{"c", "and", "yahoo"});
    CHECK(separate_words("  --- ") == std::vector<std::string>{});
    CHECK(separate_words("web2.0") == std::vector<std::string>{"web2", "0"});
    // multi-byte characters act as separators
    CHECK(separate_words("caf\xC3\xA9 bar") == std::vector<std::string>{"caf", "bar"});
}

TEST_CASE("separate_words emits only lowercase alphanumerics") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> byte(1, 255);
    for (int trial = 0; trial < 100; ++trial) {
        std::string input;
        for (int i = 0; i < 40; ++i) input.push_back(static_cast<char>(byte(rng)));
        for (const std::string& tok : separate_words(input)) {
            CHECK(!tok.empty());
            for (char c : tok) {
                bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("word_count weights description, titles and summaries") {
    StopWordSet stop;
    FeedDocument doc;
    doc.description = "tech tech";
    CHECK(word_count(doc, stop) == WordWeights{{"tech", 20}});

    FeedDocument doc2;
    doc2.summaries = {"running"};
    CHECK(word_count(doc2, stop) == WordWeights{{"run", 1}});

    FeedDocument doc3;
    doc3.description = "the";
    CHECK(word_count(doc3, make_stop({"the"})).empty());

    FeedDocument doc4;  // all three locations accumulate into one key
    doc4.description = "game";
    doc4.post_titles = {"game on", "game"};
    doc4.summaries = {"game game"};
    CHECK(word_count(doc4, stop)["game"] == 10 + 3 + 3 + 1 + 1);

    CHECK(word_count(FeedDocument{}, stop).empty());
}

TEST_CASE("blog titles are never tokenized") {
    FeedDocument doc;
    doc.title = "unique title words";
    doc.description = "body";
    WordWeights counts = word_count(doc, StopWordSet{});
    CHECK(counts.count("uniqu") == 0);
    CHECK(counts.count("titl") == 0);
    CHECK(counts == WordWeights{{"bodi", 10}});
}

TEST_CASE("stop filtering happens before stemming") {
    // "running" stems to "run", but the stop check sees the raw token, so a
    // stop set holding only "run" does not block it.
    FeedDocument doc;
    doc.summaries = {"running run"};
    WordWeights counts = word_count(doc, make_stop({"run"}));
    CHECK(counts == WordWeights{{"run", 1}});
}

TEST_CASE("word weights decompose into location weights") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> pick(0, 9);
    static const char* vocab[] = {"alpha", "beta",  "gamma", "delta", "epsilon",
                                  "zeta",  "theta", "kappa", "sigma", "omega"};
    auto random_sentence = [&](int n) {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (i) s.push_back(' ');
            s += vocab[pick(rng)];
        }
        return s;
    };
    for (int trial = 0; trial < 30; ++trial) {
        FeedDocument doc;
        doc.description = random_sentence(6);
        doc.post_titles = {random_sentence(4), random_sentence(3)};
        doc.summaries = {random_sentence(8)};
        WordWeights counts = word_count(doc, StopWordSet{});

        // independent recount per stem and location
        WordWeights expect;
        for (const auto& tok : separate_words(doc.description)) expect[porter_stem(tok)] += 10;
        for (const auto& title : doc.post_titles)
            for (const auto& tok : separate_words(title)) expect[porter_stem(tok)] += 3;
        for (const auto& summary : doc.summaries)
            for (const auto& tok : separate_words(summary)) expect[porter_stem(tok)] += 1;
        CHECK(counts == expect);
        for (const auto& [word, weight] : counts) CHECK(weight >= 1);
    }
}

TEST_CASE("get_feeds_content skips failing sources and keeps going") {
    std::string a = write_temp("tp_feed_a.xml",
                               "<rss><channel><title>A</title><description>alpha words"
                               "</description></channel></rss>");
    std::string b = write_temp("tp_feed_b.xml", "definitely not xml");
    std::string c = write_temp("tp_feed_c.xml",
                               "<rss><channel><title>C</title><description>gamma words"
                               "</description></channel></rss>");
    FeedList list{{a, "missing_file.xml", b, c}};
    std::ostringstream diag;
    BlogsContent content = get_feeds_content(list, StopWordSet{}, {}, false, &diag);
    CHECK(content.entries.size() == 2);
    CHECK(content.entries.count("A") == 1);
    CHECK(content.entries.count("C") == 1);
    CHECK(diag.str().find("missing_file.xml") != std::string::npos);
    std::remove(a.c_str());
    std::remove(b.c_str());
    std::remove(c.c_str());
}

TEST_CASE("duplicate blog titles keep the last parsed feed") {
    std::string a = write_temp("tp_dup_a.xml",
                               "<rss><channel><title>Same</title><description>first"
                               "</description></channel></rss>");
    std::string b = write_temp("tp_dup_b.xml",
                               "<rss><channel><title>Same</title><description>second"
                               "</description></channel></rss>");
    std::ostringstream diag;
    BlogsContent content = get_feeds_content(FeedList{{a, b}}, StopWordSet{}, {}, false, &diag);
    REQUIRE(content.entries.size() == 1);
    CHECK(content.entries.at("Same") == WordWeights{{"second", 10}});
    CHECK(diag.str().find("duplicate") != std::string::npos);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("an unusable list yields EmptyCorpus") {
    CHECK_THROWS_AS(get_feeds_content(FeedList{{"gone1.xml", "gone2.xml"}}, StopWordSet{}),
                    EmptyCorpus);
    CHECK_THROWS_AS(content_from_corpus({}, StopWordSet{}), EmptyCorpus);
}

TEST_CASE("stop word files are lowercased line sets") {
    StopWordSet s = StopWordSet::from_text("The\nand\n\n  OF  \n");
    CHECK(s.contains("the"));
    CHECK(s.contains("and"));
    CHECK(s.contains("of"));
    CHECK(!s.contains("banana"));
}

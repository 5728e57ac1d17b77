#include <doctest.h>

#include <celebnet/corpus.hpp>
#include <celebnet/errors.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace celebnet;
using testutil::make_celebrity;
using testutil::make_retweet;
using testutil::make_tweet;
using testutil::TempDir;
using testutil::write_file;

namespace {

const char* kRosterHeader = "handle,category,followers_future\n";

std::string tweet_line(const std::string& id, const std::string& author,
                       const std::string& text,
                       const std::string& timestamp = "2017-06-01T12:00:00Z",
                       const std::string& extra = "") {
    std::string line = "{\"id\":\"" + id + "\",\"author\":\"" + author + "\",\"text\":\"" +
                       text + "\",\"timestamp\":\"" + timestamp + "\"";
    if (!extra.empty()) line += "," + extra;
    return line + "}\n";
}

} // namespace

TEST_CASE("parse_iso8601 handles the supported shapes") {
    CHECK(parse_iso8601("1970-01-01T00:00:00Z") == 0);
    CHECK(parse_iso8601("1970-01-01 00:00:00Z") == 0);
    CHECK(parse_iso8601("1970-01-02T00:00:00Z") == 86400);
    CHECK(parse_iso8601("1969-12-31T23:59:59Z") == -1);
    CHECK(parse_iso8601("2017-01-01T00:00:00Z") == 1483228800);
    // Fractional seconds are accepted and truncated.
    CHECK(parse_iso8601("1970-01-01T00:00:01.999Z") == 1);
    // Offsets shift toward UTC.
    CHECK(parse_iso8601("1970-01-01T05:30:00+05:30") == 0);
    CHECK(parse_iso8601("1970-01-01T05:30:00+0530") == 0);
    CHECK(parse_iso8601("1969-12-31T19:00:00-05:00") == 0);
    CHECK(parse_iso8601("1970-01-01T01:00:00+01") == 0);
    // Leap day.
    CHECK(parse_iso8601("2016-02-29T00:00:00Z") ==
          parse_iso8601("2016-02-28T00:00:00Z").value() + 86400);
}

TEST_CASE("parse_iso8601 rejects malformed input") {
    CHECK_FALSE(parse_iso8601(""));
    CHECK_FALSE(parse_iso8601("2017-06-01"));
    CHECK_FALSE(parse_iso8601("2017-06-01T12:00"));
    CHECK_FALSE(parse_iso8601("2017-06-01T12:00:00"));      // missing zone
    CHECK_FALSE(parse_iso8601("2017-13-01T12:00:00Z"));     // month
    CHECK_FALSE(parse_iso8601("2017-06-32T12:00:00Z"));     // day
    CHECK_FALSE(parse_iso8601("2017-02-29T12:00:00Z"));     // not a leap year
    CHECK_FALSE(parse_iso8601("2017-06-01T24:00:00Z"));     // hour
    CHECK_FALSE(parse_iso8601("2017-06-01T12:60:00Z"));     // minute
    CHECK_FALSE(parse_iso8601("2017-06-01T12:00:61Z"));     // second
    CHECK_FALSE(parse_iso8601("2017-06-01X12:00:00Z"));     // separator
    CHECK_FALSE(parse_iso8601("2017-06-01T12:00:00Q"));     // zone letter
    CHECK_FALSE(parse_iso8601("garbage"));
}

TEST_CASE("category names round-trip") {
    const Category all[] = {Category::Movies, Category::Music, Category::News, Category::Tech,
                            Category::Sports};
    for (Category c : all) {
        auto back = category_from_string(to_string(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK_FALSE(category_from_string("Politics"));
    CHECK_FALSE(category_from_string("movies"));
    CHECK_FALSE(category_from_string(""));
}

TEST_CASE("load_corpus reads tweets and roster") {
    TempDir dir;
    std::string tweets = tweet_line("t1", "alice", "hello world");
    tweets += tweet_line("t2", "bob", "rt", "2017-06-02T08:00:00Z",
                         "\"retweet_of\":\"alice\"");
    tweets += tweet_line("t3", "carol", "hi", "2017-06-03T08:00:00Z",
                         "\"mentions\":[\"alice\",\"bob\"]");
    write_file(dir.file("tweets.jsonl"), tweets);
    write_file(dir.file("roster.csv"), std::string(kRosterHeader) +
                                           "alice,Movies,1000\n"
                                           "bob,Music,500\n");

    LoadReport report;
    Corpus corpus = load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv"), &report);

    CHECK(corpus.tweets.size() == 3);
    CHECK(corpus.roster.size() == 2);
    CHECK(report.invalid == 0);
    CHECK(report.duplicates == 0);
    CHECK(report.dropped() == 0);

    CHECK(corpus.tweets[0].id == "t1");
    CHECK(corpus.tweets[0].epoch_seconds == parse_iso8601("2017-06-01T12:00:00Z"));
    REQUIRE(corpus.tweets[1].retweet_of.has_value());
    CHECK(*corpus.tweets[1].retweet_of == "alice");
    CHECK(corpus.tweets[2].mentions == std::vector<std::string>{"alice", "bob"});

    CHECK(corpus.in_roster("alice"));
    CHECK_FALSE(corpus.in_roster("carol"));
    const CelebrityProfile* alice = corpus.find("alice");
    REQUIRE(alice != nullptr);
    CHECK(alice->category == Category::Movies);
    CHECK(alice->followers_future == 1000);
    CHECK(corpus.find("nobody") == nullptr);
}

TEST_CASE("invalid tweet records are dropped and counted") {
    TempDir dir;
    std::string tweets = tweet_line("t1", "alice", "ok");
    tweets += "not json at all\n";
    tweets += "{\"id\":\"t2\",\"author\":\"bob\"}\n";                       // missing fields
    tweets += tweet_line("", "bob", "empty id");                            // empty id
    tweets += tweet_line("t3", "", "empty author");                         // empty author
    tweets += tweet_line("t4", "bob", "bad ts", "yesterday");               // bad timestamp
    tweets += tweet_line("t5", "bob", "self rt", "2017-06-01T12:00:00Z",
                         "\"retweet_of\":\"bob\"");                         // self retweet
    tweets += tweet_line("t6", "bob", "bad rt", "2017-06-01T12:00:00Z",
                         "\"retweet_of\":7");                               // wrong type
    tweets += tweet_line("t7", "bob", "bad mention", "2017-06-01T12:00:00Z",
                         "\"mentions\":[\"\"]");                            // empty mention
    tweets += tweet_line("t8", "bob", "fine");
    write_file(dir.file("tweets.jsonl"), tweets);
    write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies,1\n");

    LoadReport report;
    Corpus corpus = load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv"), &report);

    CHECK(corpus.tweets.size() == 2);
    CHECK(report.invalid == 8);
    CHECK(report.duplicates == 0);
}

TEST_CASE("duplicate tweet ids keep the first occurrence") {
    TempDir dir;
    std::string tweets = tweet_line("t1", "alice", "first");
    tweets += tweet_line("t1", "bob", "second");
    tweets += tweet_line("t1", "carol", "third");
    tweets += tweet_line("t2", "bob", "other");
    write_file(dir.file("tweets.jsonl"), tweets);
    write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies,1\n");

    LoadReport report;
    Corpus corpus = load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv"), &report);

    REQUIRE(corpus.tweets.size() == 2);
    CHECK(corpus.tweets[0].author == "alice");
    CHECK(corpus.tweets[0].text == "first");
    CHECK(report.duplicates == 2);
    CHECK(report.invalid == 0);
    CHECK(report.dropped() == 2);
}

TEST_CASE("roster problems are fatal") {
    TempDir dir;
    write_file(dir.file("tweets.jsonl"), tweet_line("t1", "alice", "ok"));

    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("missing.csv")),
                        IoError);
    }
    SUBCASE("empty file") {
        write_file(dir.file("roster.csv"), "");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("wrong header") {
        write_file(dir.file("roster.csv"), "handle,followers\nalice,5\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("duplicate handle") {
        write_file(dir.file("roster.csv"),
                   std::string(kRosterHeader) + "alice,Movies,1\nalice,Music,2\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("unknown category") {
        write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Opera,1\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("malformed row") {
        write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("negative followers") {
        write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies,-3\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("non-numeric followers") {
        write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies,many\n");
        CHECK_THROWS_AS(load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv")),
                        ValidationError);
    }
    SUBCASE("missing tweet file") {
        write_file(dir.file("roster.csv"), std::string(kRosterHeader) + "alice,Movies,1\n");
        CHECK_THROWS_AS(load_corpus(dir.file("nope.jsonl"), dir.file("roster.csv")), IoError);
    }
}

TEST_CASE("celebrity_tweets orders by timestamp then id") {
    Corpus corpus;
    corpus.roster = {make_celebrity("alice", 10)};
    corpus.tweets = {
        make_tweet("t9", "alice", "late", "2017-06-03T00:00:00Z"),
        make_tweet("t5", "bob", "noise", "2017-06-01T00:00:00Z"),
        make_tweet("t2", "alice", "tie-b", "2017-06-01T00:00:00Z"),
        make_tweet("t1", "alice", "tie-a", "2017-06-01T00:00:00Z"),
    };

    const std::vector<TweetRecord> own = celebrity_tweets(corpus, "alice");
    REQUIRE(own.size() == 3);
    CHECK(own[0].id == "t1");
    CHECK(own[1].id == "t2");
    CHECK(own[2].id == "t9");

    CHECK_THROWS_AS(celebrity_tweets(corpus, "bob"), ValidationError);
}

TEST_CASE("average_retweet_density counts received retweets per authored tweet") {
    Corpus corpus;
    corpus.roster = {
        make_celebrity("alice", 10, Category::Movies),
        make_celebrity("bob", 20, Category::Movies),
        make_celebrity("carol", 30, Category::Music),
    };
    // Movies authored 4 tweets (3 alice + 1 bob) and received 3 retweets
    // (2 of alice, 1 of bob). carol's retweet of alice counts toward Movies
    // in the numerator and toward Music in the denominator: a retweet is
    // still a tweet its author did.
    corpus.tweets = {
        make_tweet("a1", "alice", "x"),
        make_tweet("a2", "alice", "y"),
        make_tweet("a3", "alice", "z"),
        make_tweet("b1", "bob", "w"),
        make_retweet("r1", "fan1", "alice"),
        make_retweet("r2", "carol", "alice"),
        make_retweet("r3", "fan2", "bob"),
        make_retweet("r4", "fan3", "carol"),
        make_retweet("r5", "fan4", "stranger"),
    };

    CHECK(average_retweet_density(corpus, Category::Movies) == doctest::Approx(3.0 / 4.0));
    CHECK(average_retweet_density(corpus, Category::Music) == doctest::Approx(1.0));
    CHECK_THROWS_AS(average_retweet_density(corpus, Category::Tech), UndefinedError);
}

TEST_CASE("average_retweet_density ignores tweet order") {
    Corpus corpus;
    corpus.roster = {make_celebrity("alice", 10, Category::Movies)};
    corpus.tweets = {
        make_tweet("a1", "alice", "x"),
        make_retweet("r1", "fan1", "alice"),
        make_retweet("r2", "fan2", "alice"),
    };
    const double before = average_retweet_density(corpus, Category::Movies);
    std::reverse(corpus.tweets.begin(), corpus.tweets.end());
    CHECK(average_retweet_density(corpus, Category::Movies) == before);
    CHECK(before == doctest::Approx(2.0));
}

TEST_CASE("write_corpus round-trips through load_corpus") {
    TempDir dir;
    Corpus corpus;
    corpus.roster = {
        make_celebrity("alice", 123456, Category::Tech),
        make_celebrity("bob", 99, Category::Sports),
    };
    corpus.tweets = {
        make_tweet("t1", "alice", "plain text with \"quotes\" and \\ slashes"),
        make_retweet("t2", "bob", "alice", "2017-07-01T09:30:00Z"),
        testutil::make_mention("t3", "alice", {"bob", "outsider"}),
    };

    write_corpus(corpus, dir.file("tweets.jsonl"), dir.file("roster.csv"));
    LoadReport report;
    const Corpus back =
        load_corpus(dir.file("tweets.jsonl"), dir.file("roster.csv"), &report);

    CHECK(report.dropped() == 0);
    CHECK(back == corpus);
}

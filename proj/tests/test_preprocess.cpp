#include <doctest.h>

#include "slicecheck/error.hpp"
#include "slicecheck/preprocess.hpp"

using namespace slicecheck;

namespace {

std::string pp(const std::string& text) { return preprocess_text(text, default_rules()); }

}  // namespace

TEST_SUITE("preprocess") {
  TEST_CASE("golden sentence") {
    std::string input =
        "@username_1 Have you seen the video that @another_user made?"
        "  \xF0\x9F\x91\x80 \xF0\x9F\x94\xA5 \xF0\x9F\x92\xAF https://fakelink.io";
    CHECK(pp(input) ==
          "USER have you seen the video that USER made? eyes fire hundred points HTML");
  }

  TEST_CASE("mentions become USER") {
    CHECK(pp("@alice hi") == "USER hi");
    CHECK(pp("hi @b0b_") == "hi USER");
    CHECK(pp("(@carol)") == "(USER)");
    // An @ inside a word (email-style) is not a mention.
    CHECK(pp("mail me a@b.org") == "mail me a@b.org");
    // A bare @ with nothing following stays put.
    CHECK(pp("just @ nothing") == "just @ nothing");
  }

  TEST_CASE("urls become HTML") {
    CHECK(pp("see https://example.org/x?q=1 now") == "see HTML now");
    CHECK(pp("see http://example.org.") == "see HTML.");
    CHECK(pp("see www.example.org, ok") == "see HTML, ok");
    CHECK(pp("WWW.EXAMPLE.ORG") == "HTML");
    CHECK(pp("ftp://files.example.org/pub") == "HTML");
    // "www." with nothing after it is left alone.
    CHECK(pp("www.!") == "www.!");
    // Not at a token boundary: no mask.
    CHECK(pp("awww.example") == "awww.example");
  }

  TEST_CASE("emoji expand to their names") {
    CHECK(pp("nice \xF0\x9F\x94\xA5") == "nice fire");
    CHECK(pp("\xF0\x9F\x91\x80\xF0\x9F\x94\xA5") == "eyes fire");
    // Variation selector after an emoji is consumed.
    CHECK(pp("up \xE2\x98\x80\xEF\xB8\x8F") == "up black sun with rays");
  }

  TEST_CASE("unknown emoji pass through and are counted") {
    // U+1FAE0 sits outside the bundled emoji blocks.
    PreprocessOutcome outcome =
        preprocess_text_verbose("odd \xF0\x9F\xAB\xA0 here", default_rules());
    CHECK(outcome.unknown_emoji == 1);
    CHECK(outcome.text == "odd \xF0\x9F\xAB\xA0 here");
  }

  TEST_CASE("hashtags pass through unchanged") {
    CHECK(pp("#TeamRocket forever") == "#teamrocket forever");
  }

  TEST_CASE("lowercasing spares the mask tokens") {
    CHECK(pp("@A_User SHOUTED at www.loud.example") == "USER shouted at HTML");
    // Literal USER/HTML words already in the text also survive.
    CHECK(pp("the USER typed HTML tags") == "the USER typed HTML tags");
    // ...but only at word boundaries.
    CHECK(pp("REUSERS") == "reusers");
  }

  TEST_CASE("whitespace collapses to single spaces") {
    CHECK(pp("  a\t\tb \n c  ") == "a b c");
    CHECK(pp("") == "");
    CHECK(pp(" \t ") == "");
  }

  TEST_CASE("idempotence on a tricky corpus") {
    const std::vector<std::string> corpus = {
        "@user hi",
        "plain text only",
        "WWW.CAPS.ORG",
        "www.!",
        "a@b.org stays",
        "#Hash and @Mention and https://x.io",
        "\xF0\x9F\x91\x80 double \xF0\x9F\x94\xA5\xF0\x9F\x94\xA5",
        "u \xE2\x98\x80\xEF\xB8\x8F v",
        "USER HTML literal",
        "trailing url http://a.io.",
        "odd unknown \xF0\x9F\xAB\xA0 emoji",
        "@",
        "@@double",
        "mixed CASE text",
        "  spaced   out  ",
        "dots www.a.b.c, done",
        "scheme+x://weird.ok",
        "not_a_url http:// alone",
        "e\xCC\x81 combining accent",
        "tab\tsep",
    };
    for (const std::string& text : corpus) {
      std::string once = pp(text);
      CHECK_MESSAGE(pp(once) == once, "not idempotent for: ", text);
    }
  }

  TEST_CASE("tokenize splits on ascii whitespace") {
    CHECK(tokenize("a b\tc\nd") == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(tokenize("   ") == std::vector<std::string>{});
  }

  TEST_CASE("rules validation") {
    NormalizationRules rules = default_rules();
    rules.mention_token = "";
    CHECK_THROWS_AS(validate_rules(rules), Error);
  }
}

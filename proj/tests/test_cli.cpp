#include "bifc/json_io.hpp"
#include "bifc/svg.hpp"
#include "cli_util.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bifc;
using cli_test::run;

TEST_CASE("bipartition JSON round trip") {
    auto t = TranslucentWord::parse("LRLRL,10111");
    auto plain = enumerate(t, BipartitionClass::nc);
    auto back = bipartitions_from_json(bipartitions_to_json(plain));
    REQUIRE(back.size() == plain.size());
    for (std::size_t k = 0; k < plain.size(); ++k) {
        CHECK(back[k].base == plain[k]);
        CHECK(back[k].order.empty());
    }
    auto labeled = enumerate_monotone(t);
    auto back2 = bipartitions_from_json(bipartitions_to_json(labeled));
    REQUIRE(back2.size() == labeled.size());
    for (std::size_t k = 0; k < labeled.size(); ++k) {
        CHECK(back2[k].base == labeled[k].base);
        CHECK(back2[k].order == labeled[k].order);
    }
    CHECK_THROWS_AS(bipartitions_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(bipartitions_from_json(R"([{"type": "LL,11", "blocks": [[1]]}])"), std::invalid_argument);
}

TEST_CASE("moment and cumulant JSON") {
    const char* text = R"({"variables": {"a": "L", "b": "R"},
                           "moments": {"": "1", "a": "2/4", "b": 3, "a b": "-1/3"}})";
    MomentData m = moments_from_json(text);
    CHECK(m.alphabet.size() == 2);
    CHECK(m.moments.at(parse_word(m.alphabet, "a")) == Rational(1, 2));
    CHECK(m.moments.at(parse_word(m.alphabet, "b")) == 3);
    CHECK(longest_word(m.moments) == 2);
    std::string canon = moments_to_json(m);
    CHECK(moments_to_json(moments_from_json(canon)) == canon);
    CHECK(canon.find("\"1/2\"") != std::string::npos);

    CumulantData c{m.alphabet, Family::bimonotone, m.moments};
    c.values.erase(Word{});
    std::string ctext = cumulants_to_json(c);
    CumulantData c2 = cumulants_from_json(ctext);
    CHECK(c2.family == Family::bimonotone);
    CHECK(cumulants_to_json(c2) == ctext);

    CHECK_THROWS_AS(moments_from_json(R"({"variables": {"a": "X"}, "moments": {}})"), std::invalid_argument);
    CHECK_THROWS_AS(moments_from_json(R"({"variables": {"a": "L"}, "moments": {"a": "x"}})"), std::invalid_argument);
    CHECK_THROWS_AS(moments_from_json(R"({"variables": {"a": "L"}, "moments": {"a": "1/0"}})"), std::invalid_argument);
    CHECK_THROWS_AS(moments_from_json(R"({"variables": {"a": "L"}, "moments": {"c": "1"}})"), std::invalid_argument);
    CHECK_THROWS_AS(moments_from_json(R"({"variables": {"a": "L"}, "moments": {"a L": "1"}})"), std::invalid_argument);
    CHECK_THROWS_AS(moments_from_json(R"({"moments": {}})"), std::invalid_argument);
    CHECK_THROWS_AS(cumulants_from_json(R"({"variables": {}, "family": "free", "cumulants": {}})"),
                    std::invalid_argument);
}

TEST_CASE("SVG rendering") {
    auto t = TranslucentWord::parse("LLRLRLRR,01100101");
    auto list = enumerate_monotone(TranslucentWord::parse("LRLR,1011"));
    std::string a = render_svg(list);
    CHECK(a == render_svg(list));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    std::vector<LabeledBipartition> shaded;
    for (const auto& pi : enumerate(t, BipartitionClass::shaded_nc)) shaded.push_back({pi, {}});
    REQUIRE(!shaded.empty());
    std::string b = render_svg(shaded);
    CHECK(b.find("red") != std::string::npos);
    CHECK(b.find("fill=\"white\"") != std::string::npos);
    CHECK(b.find("fill=\"black\"") != std::string::npos);
    CHECK(render_svg({}).rfind("<svg", 0) == 0);
}

TEST_CASE("enumerate command") {
    CHECK(run("enumerate --type LLL,111 --class nc --format count").out == "5\n");
    CHECK(run("enumerate --type LRLL,0101 --class all --format count").out == "2\n");
    CHECK(run("enumerate --type LRL,000 --format count").out == "1\n");
    CHECK(run("enumerate --type LLLL,1111 --class interval --format count").out == "8\n");
    CHECK(run("enumerate --type LL,11 --class monotone --format count").out == "3\n");
    CHECK(run("enumerate --word 'a L b' --alphabet a:L,b:R --format count").out == "2\n");
    auto j = run("enumerate --type LR,11 --format json");
    CHECK(j.code == 0);
    CHECK(bipartitions_from_json(j.out).size() == 2);
    auto s1 = run("enumerate --type LRLR,1011 --class monotone --format svg");
    auto s2 = run("enumerate --type LRLR,1011 --class monotone --format svg");
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
    CHECK(s1.out.rfind("<svg", 0) == 0);

    CHECK(run("enumerate --type LX,11 --format count").code == 2);
    CHECK(run("enumerate --type LL,11 --format pdf").code == 2);
    CHECK(run("enumerate --type LL,11 --class crossing").code == 2);
    CHECK(run("enumerate --format count").code == 2);
    CHECK(run("enumerate --type LLLLLLLLLLLLLLL,111111111111111 --format count").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("convert command") {
    cli_test::Scratch tmp("convert");
    cli_test::spit(tmp / "m.json", R"({"variables": {"a": "L"}, "moments": {"": "1", "a": "1", "a a": "2"}})");
    for (const char* fam : {"bifree", "biboolean", "bimonotone"}) {
        auto r = run("convert --input " + tmp / "m.json" + " --from moments --to " + fam);
        REQUIRE(r.code == 0);
        CumulantData c = cumulants_from_json(r.out);
        CHECK(family_name(c.family) == fam);
        CHECK(c.values.at(parse_word(c.alphabet, "a")) == 1);
        CHECK(c.values.at(parse_word(c.alphabet, "a a")) == 1);
    }

    const char* two = R"({"variables": {"a": "L", "b": "R"},
        "moments": {"": "1", "a": "1/2", "b": "-1", "a a": "3", "a b": "2/3", "b a": "0", "b b": "5"}})";
    cli_test::spit(tmp / "m2.json", two);
    CHECK(run("convert --input " + tmp / "m2.json" + " --output " + tmp / "k.json" + " --from moments --to bifree")
              .code == 0);
    CHECK(run("convert --input " + tmp / "k.json" + " --output " + tmp / "b.json" + " --from bifree --to biboolean")
              .code == 0);
    auto back = run("convert --input " + tmp / "b.json" + " --from biboolean --to moments");
    CHECK(back.code == 0);
    CHECK(back.out == moments_to_json(moments_from_json(two)));

    CHECK(run("convert --input " + tmp / "missing.json" + " --from moments --to bifree").code == 2);
    CHECK(run("convert --input " + tmp / "m.json" + " --from moments --to free").code == 2);
    CHECK(run("convert --input " + tmp / "m.json" + " --from bifree --to moments").code == 2);
    CHECK(run("convert --input " + tmp / "m.json" + " --from moments --to bifree --max-len 3").code == 2);
}

TEST_CASE("verify command") {
    auto r = run("verify --suite codendriform --max-len 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    auto p = run("verify --suite prelie --max-len 4 --seed 3");
    CHECK(p.code == 0);
    CHECK(run("verify --suite nonsense").code == 2);
}

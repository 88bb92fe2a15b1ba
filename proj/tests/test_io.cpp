#include <doctest.h>

#include "ilab/error.hpp"
#include "ilab/io.hpp"

using namespace ilab;

TEST_CASE("scene round trip") {
    const Scene s = merge(merge(gen_hyperboloid(3, 3), gen_planar(2, 2)), gen_generic(3, 3, 4));
    const std::string text = dump(scene_to_json(s));
    const Scene back = parse_scene(text);
    CHECK(back == s);
    CHECK(dump(scene_to_json(back)) == text);
}

TEST_CASE("integers and short rationals are accepted") {
    const auto s = parse_scene(R"({"lines":[{"p":[0,0,"1"],"q":[1,"2/4",0]}],"circles":[]})");
    REQUIRE(s.lines.size() == 1);
    CHECK(s.lines[0].q()[1] == rational(1, 2));
    CHECK(parse_scene("{}").empty());
}

TEST_CASE("parse errors carry a location") {
    auto message = [](const std::string& text) {
        try {
            parse_scene(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("{").find("malformed JSON") != std::string::npos);
    CHECK(message(R"({"lines":[{"p":[0,0,0]}]})").find("/lines/0") != std::string::npos);
    CHECK(message(R"({"lines":[{"p":[0,0,0],"q":[0,"x",0]}]})").find("/lines/0/q/1") != std::string::npos);
    CHECK(message(R"({"lines":[{"p":[0,0,0],"q":[0,0.5,0]}]})").find("/lines/0/q/1") != std::string::npos);
    CHECK(message(R"({"lines":[{"p":[1,1,1],"q":[1,1,1]}]})").find("coincide") != std::string::npos);
    CHECK(message(R"({"circles":[{"normal":[0,0,1],"offset":0,"center":[0,0,0],"r2":"-1"}]})")
              .find("/circles/0") != std::string::npos);
    CHECK(message(R"({"lines":3})").find("/lines") != std::string::npos);
    CHECK(message("[]").find("object") != std::string::npos);
}

TEST_CASE("report serialization") {
    const auto rep = all_incidences(gen_hyperboloid(2, 2));
    const Json j = to_json(rep);
    CHECK(j["totalPoints"] == 4);
    CHECK(j["points"].size() == 4);
    const std::string csv = incidences_csv(rep);
    CHECK(csv.rfind("x,y,z,lines,circles\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

    const QuadExt x = QuadExt::normalize(1, 1, 8);
    CHECK(to_json(x) == Json({{"a", "1/1"}, {"b", "2/1"}, {"d", "2"}}));

    MultiPoly p = MultiPoly::variable(0) * MultiPoly::variable(0) - MultiPoly::constant(1);
    const Json pj = to_json(p);
    CHECK(pj["degree"] == 2);
    CHECK(pj["terms"][0]["exp"] == Json::array({2, 0, 0}));
    CHECK(pj["terms"][1]["coeff"] == "-1/1");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "framecal/frame_io.hpp"
#include "framecal/errors.hpp"
#include "test_support.hpp"

using namespace framecal;
using testsupport::Rng;

namespace {

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool frames_bit_equal(const SampledFrame& a, const SampledFrame& b) {
    if (a.dim() != b.dim() || a.atom_count() != b.atom_count()) return false;
    if (a.space() != b.space()) return false;
    for (std::size_t i = 0; i < a.atom_count(); ++i) {
        if (!same_bits(a.weight(i), b.weight(i))) return false;
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (!same_bits(a.vector(i)[k].real(), b.vector(i)[k].real())) return false;
            if (!same_bits(a.vector(i)[k].imag(), b.vector(i)[k].imag())) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("format_double uses 17 significant digits and round-trips") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    const double cases[] = {0.0,
                            -0.0,
                            1.0 / 3.0,
                            0.30000000000000004,
                            5e-324,
                            std::numeric_limits<double>::max(),
                            std::numeric_limits<double>::min(),
                            std::nextafter(1.0, 2.0),
                            -2.7182818284590452,
                            1e308,
                            -1e-308};
    for (double x : cases) {
        // strtod, not std::stod: the latter raises out_of_range on the
        // subnormal cases even though strtod returns them exactly.
        const std::string s = format_double(x);
        CHECK(same_bits(std::strtod(s.c_str(), nullptr), x));
    }
    CHECK_THROWS_AS(format_double(std::numeric_limits<double>::infinity()), ParseError);
    CHECK_THROWS_AS(format_double(std::numeric_limits<double>::quiet_NaN()), ParseError);
}

TEST_CASE("frame documents round-trip bit-exactly") {
    MeasureSpace space({{"plain", 1.0},
                        {"a\"b\\c", 0.30000000000000004},
                        {"tab\there", 5e-324}});
    HilbertVector v0(2), v1(2), v2(2);
    v0[0] = Complex(0.1, -0.0);
    v0[1] = Complex(1.0 / 3.0, 1e308);
    v1[0] = Complex(-5e-324, 2.2250738585072014e-308);
    v1[1] = Complex(0.0, -1.0);
    v2[0] = Complex(std::nextafter(1.0, 2.0), -3.0);
    v2[1] = Complex(9007199254740993.0, 0.5);
    const SampledFrame f(space, {v0, v1, v2});

    const std::string text = serialize_frame(f);
    const SampledFrame back = parse_frame(text);
    CHECK(frames_bit_equal(f, back));
    // Serialization is deterministic: a second pass is byte-identical.
    CHECK(serialize_frame(back) == text);
}

TEST_CASE("random frames survive the round trip") {
    Rng rng(2026);
    for (int round = 0; round < 25; ++round) {
        const SampledFrame f = testsupport::random_frame(rng, 3, 6);
        CHECK(frames_bit_equal(f, parse_frame(serialize_frame(f))));
    }
}

TEST_CASE("serialized frame layout is stable") {
    MeasureSpace space = MeasureSpace::uniform(2);
    const SampledFrame f(space,
                         {HilbertVector::basis(2, 0), HilbertVector::basis(2, 1)});
    const std::string expected =
        "{\n"
        "  \"dim\": 2,\n"
        "  \"atoms\": [\n"
        "    {\"label\": \"a0\", \"weight\": 1, \"vector\": [[1, 0], [0, 0]]},\n"
        "    {\"label\": \"a1\", \"weight\": 1, \"vector\": [[0, 0], [1, 0]]}\n"
        "  ]\n"
        "}\n";
    CHECK(serialize_frame(f) == expected);
}

TEST_CASE("frame parsing rejects malformed documents") {
    const char* bad[] = {
        "",
        "{",
        "[1, 2]",
        "{\"atoms\": []}",
        "{\"dim\": 0, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": []}]}",
        "{\"dim\": \"two\", \"atoms\": []}",
        "{\"dim\": 2}",
        "{\"dim\": 2, \"atoms\": []}",
        "{\"dim\": 2, \"atoms\": [{\"weight\": 1, \"vector\": [[1, 0], [0, 0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": 7, \"weight\": 1, \"vector\": [[1, 0], [0, 0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": \"x\", \"weight\": \"heavy\", \"vector\": [[1, 0], [0, 0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": [[1, 0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": [[1, 0], [0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": [[1, 0], [0, 0, 0]]}]}",
        "{\"dim\": 2, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": [[1, 0], \"z\"]}]}",
        // weight must be positive (measure-space invariant)
        "{\"dim\": 1, \"atoms\": [{\"label\": \"x\", \"weight\": 0, \"vector\": [[1, 0]]}]}",
        "{\"dim\": 1, \"atoms\": [{\"label\": \"x\", \"weight\": -1, \"vector\": [[1, 0]]}]}",
        // duplicate labels
        "{\"dim\": 1, \"atoms\": [{\"label\": \"x\", \"weight\": 1, \"vector\": [[1, 0]]},"
        " {\"label\": \"x\", \"weight\": 1, \"vector\": [[0, 1]]}]}",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_frame(text), ParseError);
    }
}

TEST_CASE("operator documents round-trip bit-exactly") {
    LinearOperator a(2);
    a.at(0, 0) = Complex(0.1, -0.0);
    a.at(0, 1) = Complex(1e308, 5e-324);
    a.at(1, 0) = Complex(-1.0 / 3.0, 2.0);
    a.at(1, 1) = Complex(0.0, -0.30000000000000004);
    const std::string text = serialize_operator(a);
    const LinearOperator back = parse_operator(text);
    REQUIRE(back.dim() == 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK(same_bits(back.at(r, c).real(), a.at(r, c).real()));
            CHECK(same_bits(back.at(r, c).imag(), a.at(r, c).imag()));
        }
    CHECK(serialize_operator(back) == text);

    CHECK_THROWS_AS(parse_operator("{\"dim\": 2, \"entries\": [[[1, 0], [0, 0]]]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_operator("{\"dim\": 1, \"entries\": [[[1, 0], [0, 0]]]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_operator("{\"dim\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_operator("nope"), ParseError);
}

TEST_CASE("files save and load") {
    Rng rng(7);
    const SampledFrame f = testsupport::random_frame(rng, 2, 4);
    const std::string path = "test_frame_io_tmp.json";
    save_frame(f, path);
    const SampledFrame back = load_frame(path);
    CHECK(frames_bit_equal(f, back));
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_frame("does_not_exist_anywhere.json"), ParseError);

    LinearOperator a = testsupport::random_operator(rng, 3);
    const std::string opath = "test_frame_io_op_tmp.json";
    save_operator(a, opath);
    const LinearOperator oback = load_operator(opath);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(same_bits(oback.at(r, c).real(), a.at(r, c).real()));
    std::remove(opath.c_str());
}

TEST_CASE("fnv1a digest matches the reference vectors") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_digest("foobar") == "85944171f73967e8");
    CHECK(fnv1a_digest("framecal") != fnv1a_digest("framecal "));
}

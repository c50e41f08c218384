#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orderdraw/errors.hpp"
#include "orderdraw/ingest.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace orderdraw;

namespace {

/// Concepts by definition: every object subset whose derivation closes back
/// onto itself.
std::set<std::set<std::size_t>> enumerate_extents(const FormalContext &ctx) {
    const std::size_t g = ctx.objects().size();
    const std::size_t m = ctx.attributes().size();
    std::set<std::set<std::size_t>> extents;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
        std::set<std::size_t> intent;
        for (std::size_t a = 0; a < m; ++a) {
            bool shared = true;
            for (std::size_t o = 0; o < g; ++o) {
                if (((mask >> o) & 1U) != 0 && !ctx.has(o, a)) {
                    shared = false;
                }
            }
            if (shared) {
                intent.insert(a);
            }
        }
        std::set<std::size_t> extent;
        for (std::size_t o = 0; o < g; ++o) {
            bool all = true;
            for (std::size_t a : intent) {
                all = all && ctx.has(o, a);
            }
            if (all) {
                extent.insert(o);
            }
        }
        std::set<std::size_t> original;
        for (std::size_t o = 0; o < g; ++o) {
            if (((mask >> o) & 1U) != 0) {
                original.insert(o);
            }
        }
        if (extent == original) {
            extents.insert(extent);
        }
    }
    return extents;
}

bool is_lattice(const OrderRelation &o) {
    const std::size_t n = o.size();
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            std::size_t joins = 0;
            std::size_t meets = 0;
            for (ElementId c = 0; c < n; ++c) {
                if (o.leq(a, c) && o.leq(b, c)) {
                    bool least = true;
                    for (ElementId d = 0; d < n; ++d) {
                        if (o.leq(a, d) && o.leq(b, d) && !o.leq(c, d)) {
                            least = false;
                        }
                    }
                    joins += least ? 1 : 0;
                }
                if (o.leq(c, a) && o.leq(c, b)) {
                    bool greatest = true;
                    for (ElementId d = 0; d < n; ++d) {
                        if (o.leq(d, a) && o.leq(d, b) && !o.leq(d, c)) {
                            greatest = false;
                        }
                    }
                    meets += greatest ? 1 : 0;
                }
            }
            if (joins != 1 || meets != 1) {
                return false;
            }
        }
    }
    return true;
}

FormalContext square_context(std::size_t n, bool complement) {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<std::vector<bool>> incidence(n, std::vector<bool>(n, complement));
    for (std::size_t i = 0; i < n; ++i) {
        objects.push_back("g" + std::to_string(i + 1));
        attributes.push_back("m" + std::to_string(i + 1));
        incidence[i][i] = !complement;
    }
    return FormalContext(objects, attributes, incidence);
}

} // namespace

TEST_CASE("order text basics") {
    const OrderText t = parse_order_text("a < b\nb < c");
    CHECK(t.ground.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(t.pairs == PairSet{{0, 1}, {1, 2}});
    CHECK(read_order_text("a < a\n").relation_size() == 1);
    CHECK(read_order_text("a<b\na < b # twice\n").relation_size() == 3);
}

TEST_CASE("declarations, comments and CRLF") {
    const OrderText t = parse_order_text("# header\r\nelements: z y x\r\n\r\nx < z  # trailing\r\n");
    CHECK(t.ground.labels() == std::vector<std::string>{"z", "y", "x"});
    CHECK(t.pairs == PairSet{{2, 0}});
}

TEST_CASE("order text errors carry the line") {
    auto line_of = [](const std::string &text) {
        try {
            read_order_text(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("a <") == 1);
    CHECK(line_of("a < b\nb\n") == 2);
    CHECK(line_of("a < b < c\n") == 1);
    CHECK(line_of("a b < c\n") == 1);
    CHECK(line_of("") == 1);
    CHECK(line_of("a < b\nb < a\n") == 2);
}

TEST_CASE("property: serialize round trip") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const auto o = oracle::to_order(oracle::random_order(1 + rng() % 10, 0.3, rng));
        const auto back = read_order_text(serialize_order(o));
        CHECK(back == o);
    }
    for (const auto &o : {generators::boolean_lattice(3), generators::grid(2, 3), generators::standard_example(3)}) {
        CHECK(read_order_text(serialize_order(o)) == o);
    }
    CHECK_THROWS_AS(serialize_order(build_order({"a b"}, {})), Error);
}

TEST_CASE("cxt parsing") {
    const FormalContext one = parse_cxt("B\n\n1\n1\n\ng\nm\nX\n");
    CHECK(one.objects() == std::vector<std::string>{"g"});
    CHECK(one.has(0, 0));
    const FormalContext named = parse_cxt("B\r\nname\r\n2\r\n2\r\n\r\ng1\r\ng2\r\nm1\r\nm2\r\nX.\r\n.X\r\n");
    CHECK(named.has(0, 0));
    CHECK_FALSE(named.has(0, 1));
    CHECK(named.has(1, 1));
    const FormalContext compact = parse_cxt("B\n2\n1\ng1\ng2\nm\n.\nX\n");
    CHECK(compact.has(1, 0));
}

TEST_CASE("cxt errors") {
    CHECK_THROWS_AS(parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nY\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\ng\nm\nX\nX\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\nx\ny\n"), ParseError);
}

TEST_CASE("cxt round trip") {
    const FormalContext c = square_context(3, true);
    const FormalContext back = parse_cxt(serialize_cxt(c));
    CHECK(back.objects() == c.objects());
    CHECK(back.attributes() == c.attributes());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(back.has(i, j) == c.has(i, j));
        }
    }
}

TEST_CASE("small concept lattices") {
    const OrderRelation full = concept_lattice(parse_cxt("B\n\n1\n1\n\ng\nm\nX\n"));
    CHECK(full.size() == 1);
    // Empty incidence: top (all objects) and bottom (no objects) differ.
    const OrderRelation empty = concept_lattice(FormalContext({"g1", "g2"}, {"m1"}, {{false}, {false}}));
    CHECK(empty.size() == 2);
    // No attributes at all: the single concept is everything.
    CHECK(concept_lattice(FormalContext({"g1", "g2"}, {}, {{}, {}})).size() == 1);

    const OrderRelation diamond = concept_lattice(square_context(2, false));
    CHECK(diamond.size() == 4);
    CHECK(incomparable_pairs(diamond).size() == 2);
    CHECK(diamond.label(0) == "{}");
    CHECK(diamond.label(3) == "{g1,g2}");
}

TEST_CASE("contranominal scale of size 3 is B3") {
    const OrderRelation b = concept_lattice(square_context(3, true));
    CHECK(b.size() == 8);
    CHECK(cover_relation(b).size() == 12);
    CHECK(incomparable_pairs(b).size() == incomparable_pairs(generators::boolean_lattice(3)).size());
}

TEST_CASE("identity context of size n has n atoms plus top and bottom") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const OrderRelation o = concept_lattice(square_context(n, false));
        CHECK(o.size() == n + 2);
        CHECK(cover_relation(o).size() == 2 * n);
    }
}

TEST_CASE("concept count bound") {
    CHECK_THROWS_AS(concept_lattice(square_context(6, true), 63), TooLarge);
    CHECK(concept_lattice(square_context(6, true), 64).size() == 64);
}

TEST_CASE("labels replace whitespace") {
    const OrderRelation o = concept_lattice(FormalContext({"big dog"}, {"m"}, {{true}}));
    CHECK(o.label(0) == "{big_dog}");
}

TEST_CASE("property: concepts agree with enumeration and form a lattice") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t g = 1 + rng() % 6;
        const std::size_t m = rng() % 6;
        std::vector<std::string> objects;
        std::vector<std::string> attributes;
        for (std::size_t i = 0; i < g; ++i) {
            objects.push_back("o" + std::to_string(i));
        }
        for (std::size_t j = 0; j < m; ++j) {
            attributes.push_back("a" + std::to_string(j));
        }
        std::vector<std::vector<bool>> incidence(g, std::vector<bool>(m));
        for (auto &row : incidence) {
            for (std::size_t j = 0; j < m; ++j) {
                row[j] = rng() % 2 == 0;
            }
        }
        const FormalContext ctx(objects, attributes, incidence);
        const OrderRelation lattice = concept_lattice(ctx);
        CHECK(lattice.size() == enumerate_extents(ctx).size());
        CHECK(is_lattice(lattice));
    }
}

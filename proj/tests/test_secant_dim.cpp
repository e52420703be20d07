#include <catch2/catch_amalgamated.hpp>

#include <ranklab/secant_dim.hpp>

using namespace ranklab;

namespace {

const ExceptionTable& table()
{
    static const ExceptionTable t =
        load_exception_table(std::filesystem::path(RANKLAB_DEFAULT_DATA_DIR) / "exceptions.json");
    return t;
}

std::int64_t tdim(const VarietyFamily& v, int s, std::uint64_t seed = 0)
{
    TerraciniOptions opt;
    opt.seed = seed;
    return terracini_dim(v, s, opt);
}

nlohmann::json one_entry()
{
    return nlohmann::json::parse(
        R"([{"family":"veronese","params":[2,4],"s":5,"defect":1,"status":"theorem","citation":"x"}])");
}

} // namespace

TEST_CASE("expected_dim examples")
{
    CHECK(expected_dim(Veronese{2, 4}, 5) == 14);
    CHECK(expected_dim(Grassmann{8, 17}, 333) == 24308);
    CHECK(expected_dim(Grassmann{3, 7}, 1) == 12);
    CHECK(expected_dim(Segre{{3, 3, 3}}, 1) == 6);
    CHECK(expected_dim(Veronese{2, 2}, 1'000'000) == 5);
    CHECK_THROWS_AS(expected_dim(Veronese{2, 2}, 0), Error);
}

TEST_CASE("terracini_dim examples")
{
    CHECK(tdim(Veronese{2, 2}, 2) == 4);
    CHECK(tdim(FlagAdjoint3{}, 2) == 6);
    CHECK(tdim(Segre{{3, 3, 3}}, 4) == 25);
    CHECK(tdim(Veronese{2, 3}, 3) == 8);
    CHECK(tdim(Grassmann{3, 7}, 3) == 33);
    CHECK(tdim(Veronese{2, 4}, 5) == 13);
}

TEST_CASE("terracini_dim modular mode agrees with exact mode")
{
    TerraciniOptions opt;
    opt.mode = RankMode::modular;
    for (const auto& [v, s] : std::vector<std::pair<VarietyFamily, int>>{
             {Veronese{2, 4}, 5}, {Grassmann{3, 7}, 3}, {Segre{{3, 3, 3}}, 4}, {FlagAdjoint3{}, 2}})
        CHECK(terracini_dim(v, s, opt) == tdim(v, s));
}

TEST_CASE("terracini_dim is bounded by expected_dim and monotone in s")
{
    for (const VarietyFamily& v : {VarietyFamily(Veronese{3, 3}), VarietyFamily(Grassmann{2, 6}),
                                   VarietyFamily(Segre{{2, 2, 3}}), VarietyFamily(FlagAdjoint3{})}) {
        INFO(describe(v));
        const std::int64_t N = ambient(v).N;
        std::int64_t prev = -1;
        for (int s = 1; s <= 8; ++s) {
            const std::int64_t d = tdim(v, s);
            CHECK(d <= expected_dim(v, s));
            CHECK(d >= prev);
            if (prev < N)
                CHECK(d > prev);
            prev = d;
        }
    }
}

TEST_CASE("terracini_dim is reproducible per seed")
{
    CHECK(tdim(Veronese{3, 4}, 9, 17) == tdim(Veronese{3, 4}, 9, 17));
    CHECK_THROWS_AS(terracini_dim(Veronese{2, 2}, 0), Error);
    TerraciniOptions opt;
    opt.trials = 0;
    CHECK_THROWS_AS(terracini_dim(Veronese{2, 2}, 1, opt), Error);
    CHECK_THROWS_AS(terracini_dim(Grassmann{8, 17}, 2), Error); // exact mode refused above 5000
}

TEST_CASE("actual_dim examples")
{
    const SecantRecord a = actual_dim(Veronese{3, 4}, 9, table());
    CHECK(a.actual_dim == 33);
    CHECK(a.defect == 1);
    CHECK(a.hypersurface);
    CHECK(a.N == 34);
    CHECK(a.source == DimSource::exception_table);

    const SecantRecord b = actual_dim(Veronese{4, 3}, 7, table());
    CHECK(b.actual_dim == 33);
    CHECK(b.hypersurface);

    const SecantRecord c = actual_dim(Grassmann{3, 7}, 3, table());
    CHECK(c.actual_dim == 33);
    CHECK(c.defect == 1);
    CHECK(c.hypersurface);

    const SecantRecord dual = actual_dim(Grassmann{4, 7}, 3, table());
    CHECK(dual.actual_dim == 33);

    const SecantRecord q = actual_dim(Veronese{3, 2}, 2, table());
    CHECK(q.actual_dim == 6); // quadrics of rank <= 2 in 4 variables
    CHECK(q.defect == 1);

    const SecantRecord one = actual_dim(Grassmann{2, 4}, 1, table());
    CHECK(one.actual_dim == 4);
    CHECK(one.status == "theorem");
}

TEST_CASE("record invariants")
{
    for (const VarietyFamily& v : {VarietyFamily(Veronese{2, 4}), VarietyFamily(Veronese{4, 2}),
                                   VarietyFamily(Grassmann{3, 7}), VarietyFamily(Segre{{3, 3, 3}}),
                                   VarietyFamily(FlagAdjoint3{})}) {
        for (int s = 1; s <= generic_rank(v, table()); ++s) {
            const SecantRecord r = actual_dim(v, s, table());
            CHECK(0 <= r.actual_dim);
            CHECK(r.actual_dim <= r.expected_dim);
            CHECK(r.expected_dim <= r.N);
            CHECK(r.defect == r.expected_dim - r.actual_dim);
            CHECK(r.hypersurface == (r.actual_dim == r.N - 1));
        }
    }
}

TEST_CASE("Veronese quadric closed form matches sampling")
{
    for (int n = 1; n <= 4; ++n)
        for (int s = 1; s <= n + 1; ++s)
            CHECK(actual_dim(Veronese{n, 2}, s, table()).actual_dim == tdim(Veronese{n, 2}, s));
}

TEST_CASE("table-backed and sampled dimensions agree on the shipped entries")
{
    for (const auto& e : table().entries()) {
        const VarietyFamily v = make_family(e.family, e.params);
        if (coord_len(v) > 200)
            continue;
        INFO(describe(v) << " s=" << e.s);
        CHECK(actual_dim(v, e.s, table()).actual_dim == tdim(v, e.s));
    }
}

TEST_CASE("generic rank examples")
{
    CHECK(generic_rank(Veronese{2, 3}, table()) == 4);
    CHECK(generic_rank(Veronese{2, 4}, table()) == 6);
    CHECK(generic_rank(FlagAdjoint3{}, table()) == 3);
    CHECK(generic_rank(Segre{{3, 3, 3}}, table()) == 5);
    CHECK(generic_rank(Veronese{2, 2}, table()) == 3);
    CHECK(generic_rank(Grassmann{3, 7}, table()) == 4);
}

TEST_CASE("generic rank equals the arithmetic ceiling away from exceptions")
{
    for (const VarietyFamily& v : {VarietyFamily(Veronese{3, 3}), VarietyFamily(Veronese{2, 5}),
                                   VarietyFamily(Veronese{1, 6}), VarietyFamily(Grassmann{3, 8})}) {
        const AmbientInfo a = ambient(v);
        CHECK(generic_rank(v, table()) == (a.N + 1 + a.dimX) / (a.dimX + 1));
    }
}

TEST_CASE("exception table parsing is strict")
{
    CHECK(parse_exception_table(one_entry()).entries().size() == 1);

    auto extra = one_entry();
    extra[0]["note"] = "x";
    CHECK_THROWS_AS(parse_exception_table(extra), Error);

    auto missing = one_entry();
    missing[0].erase("citation");
    CHECK_THROWS_AS(parse_exception_table(missing), Error);

    auto zero = one_entry();
    zero[0]["defect"] = 0;
    CHECK_THROWS_AS(parse_exception_table(zero), Error);

    auto fractional = one_entry();
    fractional[0]["s"] = 5.5;
    CHECK_THROWS_AS(parse_exception_table(fractional), Error);

    auto badstatus = one_entry();
    badstatus[0]["status"] = "rumour";
    CHECK_THROWS_AS(parse_exception_table(badstatus), Error);

    CHECK_THROWS_AS(parse_exception_table(nlohmann::json::object()), Error);
    CHECK_THROWS_AS(load_exception_table("/nonexistent/table.json"), Error);
}

TEST_CASE("removing a table entry falls back to arithmetic")
{
    const ExceptionTable t = table().without(Grassmann{3, 7}, 3);
    CHECK(t.entries().size() + 1 == table().entries().size());
    CHECK(actual_dim(Grassmann{3, 7}, 3, t).actual_dim == 34);
}

TEST_CASE("conjectural Grassmann defects agree with sampling")
{
    for (const auto& e : table().entries()) {
        if (e.status != "conjecture")
            continue;
        const VarietyFamily v = make_family(e.family, e.params);
        INFO(describe(v) << " s=" << e.s);
        CHECK(expected_dim(v, e.s) - tdim(v, e.s) == e.defect);
    }
}

TEST_CASE("Segre and flag beyond the table use sampling")
{
    const SecantRecord r = actual_dim(Segre{{2, 2, 2}}, 2, table());
    CHECK(r.source == DimSource::terracini);
    CHECK(r.status == "sampled");
    CHECK(r.actual_dim == 7);
    CHECK_THROWS_AS(actual_dim(Segre{{8, 8, 8}}, 10, table()), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include <ranklab/bounds.hpp>

using namespace ranklab;

namespace {

const std::filesystem::path data_dir{RANKLAB_DEFAULT_DATA_DIR};

const ExceptionTable& table()
{
    static const ExceptionTable t = load_exception_table(data_dir / "exceptions.json");
    return t;
}

const KnownRankFacts& facts()
{
    static const KnownRankFacts f = load_known_facts(data_dir / "known_facts.json");
    return f;
}

/// Pascal-triangle binomial with C(m,k) = 0 outside 0 <= k <= m.
long pascal(long m, long k)
{
    if (m < 0 || k < 0 || k > m)
        return 0;
    std::vector<long> row{1};
    for (long i = 1; i <= m; ++i) {
        std::vector<long> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j)
            next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace

TEST_CASE("codim bound")
{
    CHECK(codim_bound(Veronese{2, 3}) == 8);
    CHECK(codim_bound(FlagAdjoint3{}) == 5);
    CHECK(codim_bound(Grassmann{2, 4}) == 2);
}

TEST_CASE("2g bounds")
{
    const BtBounds a = bt_bounds(4, true);
    CHECK(a.general == 8);
    CHECK(a.hypersurface == 7);
    const BtBounds b = bt_bounds(6, true);
    CHECK(b.general == 12);
    CHECK(b.hypersurface == 11);
    const BtBounds c = bt_bounds(1, false);
    CHECK(c.general == 2);
    CHECK_FALSE(c.hypersurface.has_value());
    CHECK_THROWS_AS(bt_bounds(0, false), Error);
    CHECK(bhmt_bound(4) == 6);
    CHECK(bhmt_bound(6) == 10);
    CHECK(bhmt_bound(3) == 4);
}

TEST_CASE("symmetric rank bounds")
{
    CHECK(jelisiejew_bound(2, 3) == 5);
    CHECK(bdp_bound(2, 3) == 5);
    CHECK(jelisiejew_bound(2, 4) == 9);
    CHECK(bdp_bound(2, 4) == 8);
    CHECK(jelisiejew_bound(2, 2) == 3);
    CHECK(bdp_bound(2, 2) == 3);
    CHECK(deparis2_bound(3) == 7);
    CHECK(deparis2_bound(4) == 10);
    CHECK(deparis2_bound(2) == 4);
}

TEST_CASE("symmetric rank bounds match a Pascal-triangle oracle and are ordered")
{
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 8; ++d) {
            const long jel = pascal(n + d - 1, n) - pascal(n + d - 5, n - 2);
            CHECK(jelisiejew_bound(n, d) == jel);
            CHECK(bdp_bound(n, d) == jel - pascal(n + d - 6, n - 2));
            if (n >= 2)
                CHECK(bdp_bound(n, d) <= jelisiejew_bound(n, d));
        }
}

TEST_CASE("main bound arithmetic")
{
    for (int r : {2, 3, 5, 7})
        CHECK(main_bound(r) == r + 1);
}

TEST_CASE("hypersurface X")
{
    CHECK(hypersurface_X_max_rank(Grassmann{2, 4}) == 2);
    try {
        hypersurface_X_max_rank(Veronese{2, 3});
        FAIL("expected NotAHypersurface");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAHypersurface);
    }
}

TEST_CASE("bounds report for plane cubics")
{
    const BoundsReport r = bounds_report(Veronese{2, 3}, facts(), table());
    CHECK(r.g == 4);
    CHECK(r.codim_bound == 8);
    CHECK(r.bt_general == 8);
    CHECK(r.bt_hypersurface == 7);
    CHECK(r.bhmt == 6);
    CHECK(r.jelisiejew == 5);
    CHECK(r.bdp == 5);
    CHECK(r.deparis2 == 7);
    CHECK(r.main_bound == 6);
    CHECK(r.known_r_max == 5);
}

TEST_CASE("bounds report for plane quartics")
{
    const BoundsReport r = bounds_report(Veronese{2, 4}, facts(), table());
    CHECK(r.g == 6);
    CHECK(r.bt_general == 12);
    CHECK(r.bt_hypersurface == 11);
    CHECK(r.bhmt == 10);
    CHECK(r.jelisiejew == 9);
    CHECK(r.bdp == 8);
    CHECK(r.deparis2 == 10);
    CHECK(r.main_bound == 8);
    CHECK(r.known_r_max == 7);
}

TEST_CASE("bounds report for conics, Gr(3,7), Segre and flag")
{
    const BoundsReport q = bounds_report(Veronese{2, 2}, facts(), table());
    CHECK(q.jelisiejew == 3);
    CHECK(q.bdp == 3);
    CHECK(q.deparis2 == 4);
    CHECK(q.main_bound == 3);
    CHECK_FALSE(q.notes.empty()); // attribution footnote

    const BoundsReport g = bounds_report(Grassmann{3, 7}, facts(), table());
    CHECK(g.g == 4);
    CHECK(g.main_bound == 4);
    CHECK(g.bt_hypersurface == 7);
    CHECK_FALSE(g.notes.empty());

    const BoundsReport f = bounds_report(FlagAdjoint3{}, facts(), table());
    CHECK(f.g == 3);
    CHECK(f.main_bound == 3);
    CHECK(f.bhmt == 4);
    CHECK(f.known_r_max == 3);

    const BoundsReport s = bounds_report(Segre{{3, 3, 3}}, facts(), table());
    CHECK(s.g == 5);
    CHECK(s.main_bound == 6);
    CHECK(s.r_max_prev_is_upper_bound);
    CHECK(s.known_r_max == 5);
}

TEST_CASE("Klein quadric and unknown r_max,g-1")
{
    const BoundsReport k = bounds_report(Grassmann{2, 4}, facts(), table());
    CHECK(k.x_is_hypersurface);
    CHECK(k.x_hypersurface_max_rank == 2);
    CHECK(k.g == 2);
    CHECK(k.main_bound == 2); // sigma_1 = X has r_max,1 = 1
    CHECK_FALSE(k.bhmt.has_value());

    // sigma_{g-1} not a hypersurface: conditional fields absent
    const BoundsReport c = bounds_report(Veronese{3, 3}, facts(), table());
    CHECK_FALSE(c.sigma_prev_hypersurface);
    CHECK_FALSE(c.bt_hypersurface.has_value());
    CHECK_FALSE(c.main_bound.has_value());
    CHECK_FALSE(c.deparis2.has_value());

    // hypersurface but r_max,g-1 unknown: no main bound, a note instead
    const BoundsReport v = bounds_report(Veronese{3, 4}, facts(), table());
    CHECK(v.sigma_prev_hypersurface);
    CHECK_FALSE(v.main_bound.has_value());
    CHECK_FALSE(v.notes.empty());
}

TEST_CASE("every present bound dominates the known maximum rank")
{
    for (const auto& f : facts().facts()) {
        if (f.sigma || f.is_upper_bound_only)
            continue;
        const VarietyFamily v = make_family(f.family, f.params);
        const BoundsReport r = bounds_report(v, facts(), table());
        INFO(describe(v));
        for (const auto& [name, value] : r.present_bounds()) {
            INFO(name);
            CHECK(value >= f.value);
        }
    }
}

TEST_CASE("bounds report is deterministic")
{
    const BoundsReport a = bounds_report(Veronese{2, 4}, facts(), table());
    const BoundsReport b = bounds_report(Veronese{2, 4}, facts(), table());
    CHECK(a.present_bounds() == b.present_bounds());
    CHECK(a.notes == b.notes);
}

TEST_CASE("known facts parsing is strict")
{
    auto doc = nlohmann::json::parse(
        R"([{"family":"veronese","params":[2,3],"sigma":3,"value":5,"is_upper_bound_only":false,"citation":"c"}])");
    CHECK(parse_known_facts(doc).facts().size() == 1);
    auto bad = doc;
    bad[0]["extra"] = 1;
    CHECK_THROWS_AS(parse_known_facts(bad), Error);
    auto decreasing = nlohmann::json::parse(
        R"([{"family":"veronese","params":[2,3],"sigma":2,"value":6,"is_upper_bound_only":false,"citation":"c"},
            {"family":"veronese","params":[2,3],"sigma":3,"value":5,"is_upper_bound_only":false,"citation":"c"}])");
    CHECK_THROWS_AS(parse_known_facts(decreasing), Error);
}

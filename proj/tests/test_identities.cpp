#include "doctest.h"

#include <cmath>
#include <set>
#include <string>

#include "json.hpp"

#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/types.hpp"

using namespace gammamorphic;

TEST_CASE("catalog covers every identity exactly once") {
    const auto& ids = all_identity_ids();
    CHECK(ids.size() == 42);
    std::set<std::string> names;
    for (identity_id id : ids) {
        names.insert(identity_name(id));
        const auto entry = catalog_entry(id);
        CHECK(entry.id == id);
        CHECK(entry.tolerance > 0.0);
        // Any verdict other than plain "verified" must explain itself.
        if (entry.status != identity_status::verified)
            CHECK(!entry.notes.empty());
        for (grid_density d :
             {grid_density::small, grid_density::standard,
              grid_density::dense})
            CHECK(!catalog_grid(id, d).empty());
    }
    CHECK(names.size() == 42);
    CHECK(names.count("unknown") == 0);
}

TEST_CASE("grids nest as prefixes across densities") {
    bool some_strict = false;
    for (identity_id id : all_identity_ids()) {
        const auto s = catalog_grid(id, grid_density::small);
        const auto m = catalog_grid(id, grid_density::standard);
        const auto d = catalog_grid(id, grid_density::dense);
        REQUIRE(s.size() <= m.size());
        REQUIRE(m.size() <= d.size());
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == m[i]);
        for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == d[i]);
        if (s.size() < d.size()) some_strict = true;
    }
    CHECK(some_strict);
}

TEST_CASE("name round trip") {
    for (identity_id id : all_identity_ids()) {
        identity_id back{};
        REQUIRE(identity_from_name(identity_name(id), back));
        CHECK(back == id);
    }
    identity_id out{};
    CHECK(!identity_from_name("NOT_AN_IDENTITY", out));
    CHECK(!identity_from_name("fe_g", out)); // names are upper case
}

TEST_CASE("single identity runs") {
    const auto fe = run_identity(identity_id::fe_g,
                                 {{"x_re", 2.5}, {"x_im", 0.0}});
    CHECK(fe.pass);
    CHECK(fe.abs_residual < 1e-10);
    CHECK(fe.tolerance == doctest::Approx(1e-10));
    CHECK(fe.status == identity_status::verified);

    const auto iv = run_identity(identity_id::integer_values, {{"n", 4.0}});
    CHECK(iv.pass);
    CHECK(iv.status == identity_status::erratum_corrected);
    CHECK(iv.notes.find("recursion") != std::string::npos);
    CHECK(iv.rhs.real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const auto kf = run_identity(identity_id::kinkelin_fe,
                                 {{"x_re", 1.0}, {"x_im", 0.0}});
    CHECK(kf.pass);
    CHECK(kf.rhs == cplx(0.0)); // 1 ln 1
    CHECK(kf.abs_residual < 1e-8);

    const auto sh = catalog_entry(identity_id::s2_shift);
    CHECK(sh.status == identity_status::derived_observation);

    CHECK_THROWS_AS(run_identity(identity_id::fe_g, {}), domain_error);
    CHECK_THROWS_AS(run_identity(identity_id::multiplication,
                                 {{"x_re", 1.2}, {"x_im", 0.0}}),
                    domain_error);
}

TEST_CASE("standard suite has no failing verified identity") {
    const auto res = run_suite({}, grid_density::standard);
    CHECK(res.total > 100);
    CHECK(res.verified_failures == 0);
    CHECK(int(res.reports.size()) == res.total);
    int sum = 0;
    for (const auto& [name, count] : res.status_counts) {
        CHECK(count > 0);
        sum += count;
    }
    CHECK(sum == res.total);
    // Every stored verdict in this build passes its stored tolerance;
    // errata and resolutions are encoded as corrected right sides, not as
    // loosened gates.
    for (const auto& r : res.reports) CHECK(r.pass);
}

TEST_CASE("filtered dense cross route grid") {
    const auto res =
        run_suite({identity_id::s2_crossroute}, grid_density::dense);
    REQUIRE(res.total == 12);
    for (const auto& r : res.reports) {
        CHECK(r.id == identity_id::s2_crossroute);
        CHECK(r.pass);
    }
}

TEST_CASE("suite output is deterministic") {
    const auto a = run_suite({identity_id::fe_g, identity_id::duplication,
                              identity_id::s2_inversion,
                              identity_id::glaisher_def},
                             grid_density::dense);
    const auto b = run_suite({identity_id::fe_g, identity_id::duplication,
                              identity_id::s2_inversion,
                              identity_id::glaisher_def},
                             grid_density::dense);
    CHECK(reports_to_json(a.reports) == reports_to_json(b.reports));
    CHECK(reports_to_table(a.reports) == reports_to_table(b.reports));
}

TEST_CASE("json serialization shape") {
    const auto res = run_suite({identity_id::fe_g}, grid_density::small);
    REQUIRE(res.total == 1);
    const auto parsed = nlohmann::json::parse(reports_to_json(res.reports));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    const auto& o = parsed[0];
    const char* expected[] = {"id",           "params",   "lhs",
                              "rhs",          "abs_residual",
                              "rel_residual", "tolerance", "pass",
                              "status",       "notes"};
    for (const char* k : expected) CHECK(o.contains(k));
    CHECK(o.size() == 10);
    CHECK(o["id"] == "FE_G");
    CHECK(o["lhs"].is_array());
    CHECK(o["lhs"].size() == 2);
    CHECK(o["pass"].is_boolean());
    CHECK(o["params"]["x_re"] == 2.5);

    // ordered_json must preserve the documented key order.
    const std::string text = reports_to_json(res.reports);
    std::size_t at = 0;
    for (const char* k : expected) {
        const auto pos = text.find(std::string("\"") + k + "\"");
        REQUIRE(pos != std::string::npos);
        CHECK(pos > at);
        at = pos;
    }
}

TEST_CASE("table serialization shape") {
    const auto res = run_suite({identity_id::fe_g, identity_id::kinkelin_fe},
                               grid_density::small);
    const std::string t = reports_to_table(res.reports);
    CHECK(t.find("id") == 0);
    CHECK(t.find("FE_G") != std::string::npos);
    CHECK(t.find("KINKELIN_FE") != std::string::npos);
    CHECK(t.find("pass") != std::string::npos);
    CHECK(t.find("FAIL") == std::string::npos);
    // Aligned columns: every line under the header starts at column 0 and
    // the header's status column lines up with the rows'.
    const auto header_end = t.find('\n');
    REQUIRE(header_end != std::string::npos);
    const auto status_col = t.find("status");
    REQUIRE(status_col < header_end);
    std::size_t line = header_end + 1;
    while (line < t.size()) {
        const auto next = t.find('\n', line);
        REQUIRE(next != std::string::npos);
        const std::string row = t.substr(line, next - line);
        CHECK(row.size() > status_col);
        CHECK(row.substr(status_col, 8).find("verified") == 0);
        line = next + 1;
    }
}

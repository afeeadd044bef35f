#include "doctest.h"

#include "json.hpp"

#include "tcc/sweep.hpp"

using namespace tcc;

namespace {

std::string run(SweepOptions o, unsigned threads) {
    o.threads = threads;
    std::string out;
    run_sweep(o, [&](const SweepRecord& r) { out += r.to_jsonl() + "\n"; });
    return out;
}

}  // namespace

TEST_SUITE("sweep") {
    TEST_CASE("records are deterministic and ordered") {
        SweepOptions o;
        o.tiles = 3;
        o.samples = 12;
        o.seed = 1;
        const std::string a = run(o, 1), b = run(o, 3);
        CHECK(a == b);
        std::size_t index = 0, start = 0;
        for (auto end = a.find('\n'); end != std::string::npos; start = end + 1, end = a.find('\n', start)) {
            const auto j = nlohmann::json::parse(a.substr(start, end - start));
            CHECK(j["index"] == index++);
            CHECK(j["ok"] == true);
        }
        CHECK(index == 12);
    }

    TEST_CASE("resuming continues the same stream") {
        SweepOptions o;
        o.tiles = 5;
        o.samples = 6;
        o.seed = 9;
        const std::string whole = run(o, 2);
        o.samples = 2;
        std::string parts = run(o, 2);
        o.start = 2;
        o.samples = 4;
        parts += run(o, 2);
        CHECK(parts == whole);
    }

    TEST_CASE("empty sweep") {
        SweepOptions o;
        o.samples = 0;
        const SweepSummary s = run_sweep(o, [](const SweepRecord&) { FAIL("no record expected"); });
        CHECK(s.records == 0);
    }

    TEST_CASE("criticality guard") {
        SweepOptions o;
        o.tiles = 3;
        o.check_critical = true;
        o.max_vertices = 4;
        const SweepRecord r = sweep_one(0, o);
        CHECK(r.critical_skipped);
        CHECK_FALSE(r.critical.has_value());
    }

    TEST_CASE("csv rows match the header") {
        SweepOptions o;
        o.tiles = 3;
        const SweepRecord r = sweep_one(3, o);
        const auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
        CHECK(commas(r.to_csv()) == commas(SweepRecord::csv_header()));
    }

    TEST_CASE("sample seeds do not depend on the start index") {
        CHECK(sample_seed(5, 10) == sample_seed(5, 10));
        CHECK(sample_seed(5, 10) != sample_seed(5, 11));
        CHECK(sample_seed(5, 10) != sample_seed(6, 10));
    }
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcc/bounds.hpp"
#include "tcc/criticality.hpp"

namespace tcc {

struct SweepOptions {
    std::size_t tiles = 3;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t start = 0;  // first sample index, for resuming
    std::vector<TileSignature> allowed;  // empty: every catalog tile
    bool exact = true;
    bool check_critical = false;
    std::size_t max_vertices = 60;  // criticality is skipped above this order
    Budget budget;
    unsigned threads = 0;  // 0 picks hardware concurrency
};

struct SweepRecord {
    std::size_t index = 0;
    std::string signature;
    std::optional<BoundsReport> bounds;
    std::optional<CriticalityReport> critical;
    bool critical_skipped = false;
    std::string error;  // set when the sample could not be processed

    bool budget_exceeded() const { return bounds && bounds->budget_exceeded(); }
    bool ok() const;
    std::string to_jsonl() const;  // one line, no trailing newline
    std::string to_csv() const;
    static std::string csv_header();
};

// Seed of sample i; independent of thread count and of the starting index.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

SweepRecord sweep_one(std::size_t index, const SweepOptions& options, const Catalog& catalog = Catalog::bundled());

struct SweepSummary {
    std::size_t records = 0;
    std::size_t failed = 0;
    std::size_t budget_exceeded = 0;
    std::size_t critical_skipped = 0;
};

// Runs samples start .. start+samples-1 in parallel and hands each record to `emit` in index order.
SweepSummary run_sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& emit,
                       const Catalog& catalog = Catalog::bundled());

}  // namespace tcc

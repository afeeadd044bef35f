#include "tcc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "tcc/criticality.hpp"
#include "tcc/error.hpp"

namespace tcc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string exact_field(const std::optional<SolveResult>& r) { return r ? std::to_string(r->value) : ""; }

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) { return splitmix64(splitmix64(seed) ^ index); }

bool SweepRecord::ok() const {
    if (!error.empty() || !bounds || !bounds->checks_ok()) return false;
    if (critical && !(critical->is_2cc && critical->three_connected)) return false;
    return true;
}

std::string SweepRecord::to_jsonl() const {
    nlohmann::ordered_json j;
    j["index"] = index;
    j["signature"] = signature;
    if (bounds) {
        const BoundsReport& b = *bounds;
        j["vertices"] = b.vertex_count;
        j["edges"] = b.edge_count;
        auto side = [](int lower, int upper, const std::optional<SolveResult>& exact) {
            nlohmann::ordered_json s;
            s["lower"] = lower;
            s["upper"] = upper;
            if (exact) {
                s["exact"] = exact->value;
                s["status"] = to_string(exact->status);
                s["nodes"] = exact->nodes_explored;
            }
            return s;
        };
        j["gamma"] = side(b.gamma_lower, b.gamma_upper, b.gamma_exact);
        j["alpha"] = side(b.alpha_lower, b.alpha_upper, b.alpha_exact);
        j["checks"] = {{"gamma_sandwich", b.gamma_sandwich},
                       {"alpha_sandwich", b.alpha_sandwich},
                       {"dom_witness_ok", b.dom_witness_ok},
                       {"ind_witness_ok", b.ind_witness_ok}};
        if (!b.failures.empty()) j["failures"] = b.failures;
    }
    if (critical)
        j["critical"] = {{"is_2cc", critical->is_2cc}, {"three_connected", critical->three_connected}};
    else if (critical_skipped)
        j["critical"] = "skipped";
    if (!error.empty()) j["error"] = error;
    j["ok"] = ok();
    return j.dump();
}

std::string SweepRecord::csv_header() {
    return "index,signature,vertices,edges,gamma_lower,gamma_upper,gamma_exact,gamma_status,alpha_lower,"
           "alpha_upper,alpha_exact,alpha_status,gamma_sandwich,alpha_sandwich,dom_witness_ok,ind_witness_ok,"
           "is_2cc,three_connected,ok";
}

std::string SweepRecord::to_csv() const {
    auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
    std::string out = std::to_string(index) + "," + signature + ",";
    if (bounds) {
        const BoundsReport& b = *bounds;
        out += std::to_string(b.vertex_count) + "," + std::to_string(b.edge_count) + ",";
        out += std::to_string(b.gamma_lower) + "," + std::to_string(b.gamma_upper) + "," + exact_field(b.gamma_exact) +
               "," + (b.gamma_exact ? std::string(to_string(b.gamma_exact->status)) : "") + ",";
        out += std::to_string(b.alpha_lower) + "," + std::to_string(b.alpha_upper) + "," + exact_field(b.alpha_exact) +
               "," + (b.alpha_exact ? std::string(to_string(b.alpha_exact->status)) : "") + ",";
        out += flag(b.gamma_sandwich) + "," + flag(b.alpha_sandwich) + "," + flag(b.dom_witness_ok) + "," +
               flag(b.ind_witness_ok) + ",";
    } else {
        out += ",,,,,,,,,,,,,,";
    }
    if (critical)
        out += flag(critical->is_2cc) + "," + flag(critical->three_connected) + ",";
    else
        out += ",,";
    return out + flag(ok());
}

SweepRecord sweep_one(std::size_t index, const SweepOptions& options, const Catalog& catalog) {
    SweepRecord rec;
    rec.index = index;
    try {
        const Signature sig = random_signature(options.tiles, options.allowed, sample_seed(options.seed, index), catalog);
        rec.signature = sig.text();
        BoundsOptions bo;
        bo.compute_exact = options.exact;
        bo.budget = options.budget;
        rec.bounds = bounds_report(sig, bo, catalog);
        if (options.check_critical) {
            if (rec.bounds->vertex_count > options.max_vertices) {
                rec.critical_skipped = true;
            } else {
                CriticalityOptions co;
                co.threads = 1;
                rec.critical = verify_2cc(build_multigraph(sig, catalog).graph, co);
            }
        }
    } catch (const Error& e) {
        rec.error = e.what();
    }
    return rec;
}

SweepSummary run_sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& emit,
                       const Catalog& catalog) {
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = std::max<std::size_t>(1, threads * 4);
    SweepSummary summary;
    for (std::size_t base = 0; base < options.samples; base += chunk) {
        const std::size_t count = std::min(chunk, options.samples - base);
        std::vector<SweepRecord> records(count);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < count;)
                records[k] = sweep_one(options.start + base + k, options, catalog);
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 1; t < std::min<std::size_t>(threads, count); ++t) pool.emplace_back(work);
            work();
        }
        for (const auto& r : records) {
            ++summary.records;
            summary.failed += !r.ok();
            summary.budget_exceeded += r.budget_exceeded();
            summary.critical_skipped += r.critical_skipped;
            emit(r);
        }
    }
    return summary;
}

}  // namespace tcc

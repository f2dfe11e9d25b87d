#include "cliffsym/sweep.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cliffsym {

bool SweepRow::pass() const {
    if (semisimple) return semisimple->pass;
    for (const auto& r : reports)
        if (!r.conformance.pass) return false;
    return true;
}

namespace {

struct Task {
    size_t row = 0;
    // simple rows: classify family `family` into slots [first, first + 2^k)
    int family = -1;
    size_t first = 0;
    std::vector<BladeMask> blades;
};

}  // namespace

SweepResult run_sweep(const SweepOptions& opt) {
    SweepResult res;
    res.max_n = opt.max_n;

    std::vector<Task> tasks;
    for (int n = 0; n <= opt.max_n; ++n)
        for (int p = n; p >= 0; --p) {
            int q = n - p;
            SweepRow row;
            row.sig = AlgebraSig(p, q);
            row.info = mod8_type(p, q);
            size_t row_index = res.rows.size();
            if (row.info.simple) {
                auto families = commuting_blade_sets(row.sig);
                size_t total = 0;
                for (const auto& fam : families) total += size_t(1) << fam.size();
                row.reports.resize(total, ClassificationReport{row.sig, {}, ""});
                size_t first = 0;
                for (size_t fi = 0; fi < families.size(); ++fi) {
                    tasks.push_back({row_index, static_cast<int>(fi), first, families[fi]});
                    first += size_t(1) << families[fi].size();
                }
            } else {
                tasks.push_back({row_index, -1, 0, {}});
            }
            res.rows.push_back(std::move(row));
        }

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            size_t ti = next.fetch_add(1);
            if (ti >= tasks.size()) return;
            const Task& t = tasks[ti];
            SweepRow& row = res.rows[t.row];
            try {
                if (t.family < 0) {
                    row.semisimple = classify_semisimple(row.sig.p, row.sig.q);
                } else {
                    int k = static_cast<int>(t.blades.size());
                    for (int bits = 0; bits < (1 << k); ++bits) {
                        SpinorRep rep = build_spinor_rep(row.sig, spec_from_family(t.blades, bits));
                        row.reports[t.first + bits] = classify_rep(rep);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& row : res.rows) {
        if (row.semisimple) {
            if (!row.semisimple->pass) res.failures += 1;
            continue;
        }
        for (const auto& r : row.reports) {
            res.total_reports += 1;
            res.cover_census[r.group.order8_cover] += 1;
            if (!r.conformance.pass) res.failures += 1;
        }
    }
    return res;
}

Json sweep_to_json(const SweepResult& res) {
    Json j;
    j["max_n"] = res.max_n;
    Json rows = Json::array();
    for (const auto& row : res.rows) {
        Json rj;
        rj["p"] = row.sig.p;
        rj["q"] = row.sig.q;
        rj["type"] = row.info.h_type;
        rj["ring"] = ring_name(row.info.ring);
        rj["simple"] = row.info.simple;
        if (row.semisimple) {
            rj["detail"] = semisimple_to_json(*row.semisimple);
            rj["pass"] = row.semisimple->pass;
        } else {
            Json reports = Json::array();
            std::map<std::string, long> census;
            for (const auto& r : row.reports) {
                Json e;
                e["idempotent"] = r.idempotent;
                e["spec"] = spec_to_json(r.spec);
                e["abc"] = abc_to_string(r.group.abc);
                e["order4_group"] = r.group.order4;
                e["order8_cover"] = r.group.order8_cover;
                e["abelian"] = r.group.abelian;
                e["cliffordian"] = !r.group.abelian;
                e["conformance_pass"] = r.conformance.pass;
                e["conformance_case"] = r.conformance.case_label;
                reports.push_back(e);
                census[r.group.order8_cover] += 1;
            }
            rj["reports"] = reports;
            Json cj;
            for (const auto& [cover, count] : census) cj[cover] = count;
            rj["cover_census"] = cj;
            rj["pass"] = row.pass();
        }
        rows.push_back(rj);
    }
    j["rows"] = rows;
    Json census;
    for (const auto& [cover, count] : res.cover_census) census[cover] = count;
    j["aggregate"] = Json{{"total_representations", res.total_reports},
                          {"failures", res.failures},
                          {"cover_census", census}};
    return j;
}

}  // namespace cliffsym

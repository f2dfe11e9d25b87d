#pragma once

#include <map>
#include <optional>

#include "cliffsym/report.hpp"

namespace cliffsym {

struct SweepOptions {
    int max_n = 8;
    int jobs = 1;
};

struct SweepRow {
    AlgebraSig sig;
    StructureInfo info;
    /// Simple types: one entry per (family, sign pattern), canonical order.
    std::vector<ClassificationReport> reports;
    std::optional<SemisimpleReport> semisimple;
    bool pass() const;
};

struct SweepResult {
    int max_n = 0;
    std::vector<SweepRow> rows;
    long total_reports = 0;
    long failures = 0;
    std::map<std::string, long> cover_census;  // over simple-type reports
    bool all_pass() const { return failures == 0; }
};

/// Classify every enumerated idempotent of every simple Cl(p,q) with
/// p+q <= max_n, and every semisimple one through both decomposition
/// variants. Deterministic output independent of the parallelism degree.
SweepResult run_sweep(const SweepOptions& opt);

Json sweep_to_json(const SweepResult& res);

}  // namespace cliffsym

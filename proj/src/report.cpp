#include "lfvop/report.hpp"

#include <sstream>

namespace lfvop {

namespace {

Report rational_array(const RationalVector& values) {
    Report array = Report::array();
    for (const auto& value : values) array.push_back(to_string(value));
    return array;
}

const char* kind_name(CertificateKind kind) {
    return kind == CertificateKind::Interior ? "interior" : "boundary";
}

const char* status_name(ValidationStatus status) {
    switch (status) {
        case ValidationStatus::Valid: return "valid";
        case ValidationStatus::EmptyFeasibleSet: return "empty_feasible_set";
        case ValidationStatus::StandingConditionViolated: return "standing_condition_violated";
    }
    return "valid";
}

Report certificate_json(const std::optional<Certificate>& cert) {
    if (!cert) return nullptr;
    Report json;
    json["lambda"] = rational_array(cert->lambda);
    json["mu"] = rational_array(cert->mu);
    json["kind"] = kind_name(cert->kind);
    return json;
}

/// Indices in reports are 1-based, matching the f_1..f_m naming everywhere
/// else in the output.
Report witness_json(const std::optional<DominanceWitness>& witness) {
    if (!witness) return nullptr;
    Report json;
    json["y"] = rational_array(witness->y);
    if (witness->kind == WitnessKind::StrictAll) {
        json["kind"] = "strict_all";
        json["strict_index"] = nullptr;
    } else {
        json["kind"] = "weak_with_strict_index";
        json["strict_index"] = witness->strict_index + 1;
    }
    return json;
}

Report validation_json(const ValidationReport& validation) {
    Report json;
    json["status"] = status_name(validation.status);
    if (validation.violating_objective)
        json["violating_objective"] = *validation.violating_objective + 1;
    else
        json["violating_objective"] = nullptr;
    Report minima = Report::array();
    for (const auto& minimum : validation.denominator_minima) {
        if (minimum)
            minima.push_back(to_string(*minimum));
        else
            minima.push_back(nullptr);  // denominator unbounded below on K
    }
    json["denominator_minima"] = minima;
    return json;
}

Report problem_json(const Problem& problem) {
    Report json;
    json["n"] = problem.dimension();
    json["m"] = problem.num_objectives();
    json["p"] = problem.feasible_set.num_constraints();
    return json;
}

Report verification_json(const Problem& problem, const Query& query, const Certificate& cert) {
    VerificationResult outcome = verify_certificate(problem, query, cert);
    Report json;
    json["valid"] = outcome.valid;
    if (outcome.inner_optimum)
        json["inner_optimum"] = to_string(*outcome.inner_optimum);
    else
        json["inner_optimum"] = nullptr;  // inner LP unbounded below
    return json;
}

const char* refinement_name(RefinementSource refinement) {
    return refinement == RefinementSource::Oracle ? "oracle" : "none";
}

}  // namespace

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::NotWeaklyEpsEfficient: return "NotWeaklyEpsEfficient";
        case Verdict::WeaklyEpsEfficientOnly: return "WeaklyEpsEfficientOnly";
        case Verdict::EpsEfficient: return "EpsEfficient";
        case Verdict::WeakCertifiedOnly: return "WeakCertifiedOnly";
    }
    return "WeakCertifiedOnly";
}

Report check_report(const Problem& problem, const Query& query, const ValidationReport& validation,
                    const Classification& result, bool recheck) {
    Report report;
    report["command"] = "check";
    report["problem"] = problem_json(problem);
    report["point"] = rational_array(query.x_bar);
    report["epsilon"] = rational_array(query.epsilon);
    report["validation"] = validation_json(validation);
    report["verdict"] = verdict_name(result.verdict);
    report["weak_certificate"] = certificate_json(result.weak_certificate);
    report["interior_certificate"] = certificate_json(result.interior_certificate);
    report["witness"] = witness_json(result.witness);
    report["refinement"] = refinement_name(result.refinement);
    if (recheck) {
        Report rechecked;
        rechecked["weak_certificate"] =
            result.weak_certificate ? verification_json(problem, query, *result.weak_certificate) : Report(nullptr);
        rechecked["interior_certificate"] = result.interior_certificate
                                                ? verification_json(problem, query, *result.interior_certificate)
                                                : Report(nullptr);
        if (result.witness) {
            Report witness_check;
            witness_check["holds"] = witness_holds(problem, query, *result.witness);
            rechecked["witness"] = witness_check;
        } else {
            rechecked["witness"] = nullptr;
        }
        report["recheck"] = rechecked;
    }
    return report;
}

Report certify_report(const Problem& problem, const Query& query, const ValidationReport& validation,
                      const std::string& mode, const std::optional<Certificate>& certificate, bool recheck) {
    Report report;
    report["command"] = "certify";
    report["mode"] = mode;
    report["problem"] = problem_json(problem);
    report["point"] = rational_array(query.x_bar);
    report["epsilon"] = rational_array(query.epsilon);
    report["validation"] = validation_json(validation);
    report["found"] = certificate.has_value();
    report["certificate"] = certificate_json(certificate);
    if (recheck)
        report["recheck"] = certificate ? verification_json(problem, query, *certificate) : Report(nullptr);
    return report;
}

std::string sweep_csv(const Problem& problem, const std::vector<SweepRow>& rows) {
    const std::size_t n = problem.dimension();
    const std::size_t m = problem.num_objectives();
    std::ostringstream out;
    for (std::size_t j = 0; j < n; ++j) out << "x" << j + 1 << ",";
    out << "status,verdict";
    for (std::size_t i = 0; i < m; ++i) out << ",lambda_" << i + 1;
    for (std::size_t j = 0; j < n; ++j) out << ",witness_y" << j + 1;
    out << ",strict_index\n";

    for (const auto& row : rows) {
        for (const auto& coordinate : row.point) out << to_string(coordinate) << ",";
        switch (row.status) {
            case SweepStatus::Classified: out << "ok"; break;
            case SweepStatus::Skipped: out << "skipped"; break;
            case SweepStatus::Error: out << "error:" << row.error; break;
        }
        out << ",";
        if (row.classification) out << verdict_name(row.classification->verdict);

        // Multipliers: prefer the interior certificate, else the weak one.
        const Certificate* cert = nullptr;
        const DominanceWitness* witness = nullptr;
        if (row.classification) {
            if (row.classification->interior_certificate)
                cert = &*row.classification->interior_certificate;
            else if (row.classification->weak_certificate)
                cert = &*row.classification->weak_certificate;
            if (row.classification->witness) witness = &*row.classification->witness;
        }
        for (std::size_t i = 0; i < m; ++i) {
            out << ",";
            if (cert) out << to_string(cert->lambda[i]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            out << ",";
            if (witness) out << to_string(witness->y[j]);
        }
        out << ",";
        if (witness && witness->kind == WitnessKind::WeakWithStrictIndex)
            out << witness->strict_index + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace lfvop

#pragma once

#include <string>
#include <vector>

#include "relcode/codebook.hpp"

namespace relcode {

// One line of the discrepancy report. FINDING lines are data, not failures:
// they quantify the places where the model's stated relations disagree.
struct AuditCheck {
    std::string id;
    bool pass;
    std::string value;
};

// Runs the eight checks A1, R1, K1, K2, F1, T1, T2, T3 against an explicit
// codebook model (identities and divergence directions) and a figure-mode
// parameterization (free-energy signs and critical-velocity trends).
std::vector<AuditCheck> run_audit(const EncodingModel& model, const FigureModel& figure,
                                  double power);

std::string format_audit_line(const AuditCheck& check);

} // namespace relcode

#ifndef SGC_PLAN_IO_H
#define SGC_PLAN_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "sgc/task.h"

namespace sgc {

// IPC plan format: one "(action-name arg*)" per line, ';' starts a comment.
// Steps are token lists; resolve_plan_steps joins multi-token steps with
// "--" (the grounder's naming scheme) and checks them against a task.

using PlanSteps = std::vector<std::vector<std::string>>;

PlanSteps parse_plan(std::string_view text);

Plan resolve_plan_steps(const GroundTask& task, const PlanSteps& steps);  // throws UnknownAction

Plan parse_plan_against(const GroundTask& task, std::string_view text);

std::string write_plan(const GroundTask& task, const Plan& plan);

}  // namespace sgc

#endif

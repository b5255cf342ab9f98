#ifndef SGC_NATIVE_H
#define SGC_NATIVE_H

#include <string>
#include <string_view>

#include "sgc/task.h"

namespace sgc {

/*
  Native ground-task format: a single whitespace-insensitive s-expression

    (task (fluents p q r)
          (init r)
          (goal)
          (action a1 :pre (r) :add (p) :del () :cost 1)
          (soft (p 3) (q 5))
          (soft-formula :dnf ((p q)) :utility -2))

  Formulas take :dnf / :cnf with a list of literal groups, or :literal with
  a single literal; a literal is a fluent name or (not name). Actions may
  carry :neg-pre for tasks compiled in negative-preconditions mode.
  read(write(task)) is the identity on tasks and write(read(text)) is a
  fixpoint on canonical text.
*/

struct NativeReadOptions {
    // Compiled artifacts legitimately contain sgc-- names; inputs to the
    // compilation pipeline must not.
    bool allow_reserved_names = true;
};

SoftGoalTask read_native(std::string_view text, const NativeReadOptions& options = {});
std::string write_native(const SoftGoalTask& task);
std::string write_native(const GroundTask& task);

}  // namespace sgc

#endif

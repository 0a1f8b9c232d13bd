// Todd-Coxeter coset enumeration.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galcov/presentation.hpp"

namespace galcov {

enum class Strategy { HLT, Felsch };
std::string strategy_name(Strategy s);

struct EnumerationOptions {
  Strategy strategy = Strategy::Felsch;
  std::uint64_t max_cosets = 4'000'000;
  // Generators with a g^2 relator share one column for g and g^-1.
  bool involution_columns = true;
  // Reverse the relator order before enumeration.
  bool reverse_relators = false;
};

struct CosetTable {
  enum class Status { Complete, BudgetExceeded } status = Status::BudgetExceeded;
  std::uint64_t index = 0;  // live cosets; the subgroup index when complete
  std::uint64_t total_defined = 0;
  std::uint64_t max_live = 0;
  double seconds = 0;

  std::vector<GeneratorId> generators;
  std::vector<int> column_of;  // 2 * generator + (exp < 0)
  std::vector<int> inverse_column;
  // Complete tables only: rows 1..index, 0-based storage per row.
  std::vector<std::int32_t> table;
  std::size_t columns = 0;

  bool complete() const { return status == Status::Complete; }
  // Coset reached from `coset` (1-based) by reading w; throws if undefined.
  std::int64_t trace(std::int64_t coset, const FreeWord& w) const;
  // Every relator closes at every coset.
  bool verify(const GroupPresentation& p) const;
};

CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<FreeWord>& subgroup_gens,
                        const EnumerationOptions& opt = {});

}  // namespace galcov

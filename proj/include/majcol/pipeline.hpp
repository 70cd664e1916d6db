#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/random.hpp"
#include "majcol/repair.hpp"
#include "majcol/types.hpp"

namespace majcol {

enum class Strategy { Auto, Sparse, Main, CrudeDense };
enum class PipelineStatus { Certified, BestEffort };

const char* to_string(Strategy s);
const char* to_string(PipelineStatus s);

struct PipelineParams {
  /// Recolouring steps; 0 selects clamp(ceil((ln ln n)^2), 10, 200).
  std::size_t t0 = 0;
  std::size_t ell = 50;
  std::size_t max_retries = 5;
  Strategy strategy = Strategy::Auto;
};

std::size_t default_t0(std::size_t n);

struct StageDiagnostic {
  std::size_t attempt = 0;
  std::string stage;
  bool ok = true;
  std::string detail;
  double millis = 0.0;
};

struct PipelineReport {
  Strategy strategy = Strategy::Auto;
  PipelineStatus status = PipelineStatus::BestEffort;
  std::size_t n = 0;
  std::size_t arcs = 0;
  double density = 0.0;
  std::size_t t0 = 0;
  std::size_t ell = 0;
  std::size_t retries = 0;
  std::size_t u_size = 0;
  std::size_t actions = 0;
  DefectKindCounts defect_kinds;
  std::optional<RepairCertificate> certificate;
  std::size_t recolour_nonmajority = 0;
  std::size_t defect_graph_vertices = 0;
  std::size_t defect_graph_edges = 0;
  std::size_t violators = 0;
  std::vector<StageDiagnostic> stages;
};

struct PipelineResult {
  Colouring3 colouring;
  PipelineReport report;
};

Strategy choose_strategy(const Digraph& d);

PipelineResult majority_3_colour(const Digraph& d, const PipelineParams& params, Seed seed);

}  // namespace majcol

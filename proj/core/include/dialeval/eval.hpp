#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dialeval/aggregate.hpp"
#include "dialeval/dialog.hpp"
#include "dialeval/metrics.hpp"
#include "dialeval/score_table.hpp"

namespace dialeval {

struct Coverage {
  std::size_t scored = 0;   // rows joined onto a labeled turn
  std::size_t skipped = 0;  // rows with no matching labeled turn
};

// Correlations of one score table against one dataset. A correlation field
// is present only when at least two valid pairs exist and the correlation is
// defined; otherwise it stays empty.
struct EvalReport {
  std::string dataset;
  std::string model_id;
  std::optional<CorrelationResult> turn_correlation;       // vs quality_3p
  std::optional<CorrelationResult> dialog_correlation_3p;  // vs rating_3p
  std::optional<CorrelationResult> dialog_correlation_1p;  // vs rating_1p
  // Extra dialog-level dimensions, correlated from numeric dialog extras.
  std::map<std::string, CorrelationResult> dialog_field_correlations;
  Coverage turn_coverage;
};

// Pearson + Spearman between scores and quality_3p over the exact
// (dialog_id, turn_index) join. Unlabeled or unmatched rows are skipped and
// counted. Fewer than two joined pairs raises Error.
CorrelationResult evaluate_turn_level(const ScoreTable& table,
                                      const std::vector<Dialog>& dialogs,
                                      Coverage* coverage = nullptr);

enum class DialogTarget { rating_1p, rating_3p };

CorrelationResult evaluate_dialog_level(const std::vector<DialogScore>& scores,
                                        const std::vector<Dialog>& dialogs,
                                        DialogTarget target);

// Same join, but the target is a numeric dialog extras field (e.g. the
// dialog-level dimensions shipped with written-dialog releases).
CorrelationResult evaluate_dialog_field(const std::vector<DialogScore>& scores,
                                        const std::vector<Dialog>& dialogs,
                                        const std::string& field);

// Reads and validates a third-party score TSV so baseline outputs plug into
// the same evaluation path as model outputs.
ScoreTable ingest_external_scores(const std::string& path);

// Full evaluation of one score table: turn-level correlation plus
// dialog-level correlations of the mean-aggregated scores against 3P/1P
// ratings and any requested extras fields. Undefined correlations (too few
// pairs, constant inputs) leave the corresponding field empty.
EvalReport evaluate_model_scores(const std::string& dataset,
                                 const std::string& model_id,
                                 const ScoreTable& table,
                                 const std::vector<Dialog>& dialogs,
                                 const std::vector<std::string>& dialog_fields = {});

enum class ReportFormat { tsv, markdown };

ReportFormat report_format_from_string(const std::string& s);

// Deterministic table, one row per report, fixed column order:
// model, dataset, turn n/Pearson/Spearman, 3P and 1P rating Pearson/Spearman,
// coverage counts, then any extras dimensions in sorted order.
std::string render_report(const std::vector<EvalReport>& reports,
                          ReportFormat format);

}  // namespace dialeval

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contextqa/corpus.hpp"
#include "contextqa/generation.hpp"
#include "contextqa/prompt.hpp"
#include "contextqa/question.hpp"
#include "contextqa/retrieval.hpp"

namespace contextqa {

struct MatchOutcome {
  enum class Kind { Choice, Abstain, Unmatched };

  Kind kind = Kind::Unmatched;
  std::string label;  // set iff kind == Choice

  static MatchOutcome choice(std::string label) {
    return MatchOutcome{Kind::Choice, std::move(label)};
  }
  static MatchOutcome abstain() { return MatchOutcome{Kind::Abstain, {}}; }
  static MatchOutcome unmatched() { return MatchOutcome{Kind::Unmatched, {}}; }

  bool is_choice() const { return kind == Kind::Choice; }
  std::string to_string() const;  // "a".."z", "ABSTAIN", "UNMATCHED"
};

struct PromptTrace {
  std::vector<std::string> included_section_ids;
  int context_tokens = 0;
  int total_tokens = 0;
  std::string rendered_prompt;  // filled only when tracing is enabled
};

struct AnswerRecord {
  int question_id = 0;
  std::string raw_model_text;
  MatchOutcome matched;
  bool correct = false;
  std::optional<PromptTrace> prompt_trace;
};

struct EvaluationReport {
  std::string condition_name;
  std::optional<int> context_budget;
  std::vector<int> failed_ids;  // sorted ascending
  double passing_score_percent = 0.0;
  std::vector<AnswerRecord> records;
};

std::vector<MultipleChoiceQuestion> load_test(const std::filesystem::path& path);

/// Free-text answer to choice label, first hit wins:
///   1. abstention ("i don't know" / "i do not know"),
///   2. leading label ("b)", "a.", "c:"),
///   3. normalized equality against a choice text,
///   4. unique containment of a choice text (two or more hits: UNMATCHED),
///   5. UNMATCHED.
/// Normalization casefolds, maps typographic quotes, treats "don't" and
/// "do not" as equal, strips punctuation, and collapses whitespace.
MatchOutcome match_answer(const std::string& raw, const MultipleChoiceQuestion& q);

/// ABSTAIN and UNMATCHED count as failures; the passing score is
/// 100 * (N - failures) / N, reported with one-decimal precision.
EvaluationReport score_test(std::vector<AnswerRecord> records, const std::string& condition,
                            std::optional<int> context_budget = std::nullopt);

struct PipelineBackends {
  EmbeddingBackendConfig embedding;
  CompletionBackendConfig completion;
};

struct RunOptions {
  std::optional<PromptBudget> budget;  // nullopt: the no-context condition
  FormattingMode mode = FormattingMode::PreserveBullets;
  QuestionLayout layout = QuestionLayout::Multiline;
  SimilarityMetric metric = SimilarityMetric::Cosine;
  bool trace_prompts = false;
  // When set, completed records are flushed here before an aborting
  // backend error is rethrown.
  std::filesystem::path partial_output_path;
  std::string condition_name;  // derived from the budget when empty
};

/// Full pipeline for one condition: embed each question (stem plus choices),
/// rank, assemble, complete, match, score.
EvaluationReport run_condition(const std::vector<MultipleChoiceQuestion>& test,
                               const CorpusTable& corpus, const VectorStore& store,
                               const PipelineBackends& backends, const Tokenizer& tok,
                               const RunOptions& opts);

/// One report per entry, in the given order; std::nullopt entries run the
/// no-context baseline. A scripted completion path naming a directory is
/// resolved per condition to <dir>/completions-<label>.jsonl.
std::vector<EvaluationReport> run_sweep(const std::vector<MultipleChoiceQuestion>& test,
                                        const CorpusTable& corpus, const VectorStore& store,
                                        const PipelineBackends& backends, const Tokenizer& tok,
                                        const std::vector<std::optional<int>>& budgets,
                                        const RunOptions& base_opts);

enum class AblationVariant { DropChoices, EditChoice };

struct ChoiceEdit {
  std::string label;
  std::string new_text;
};

/// Runs the pipeline on the original and the variant question with identical
/// retrieval context; scripted lookups use "<id>" and "<id>.variant".
std::pair<AnswerRecord, AnswerRecord> run_ablation(const MultipleChoiceQuestion& question,
                                                   AblationVariant variant,
                                                   const std::optional<ChoiceEdit>& edit,
                                                   const CorpusTable& corpus,
                                                   const VectorStore& store,
                                                   const PipelineBackends& backends,
                                                   const Tokenizer& tok, const RunOptions& opts);

struct FormatComparison {
  EvaluationReport bullets;
  EvaluationReport comma;
};

/// The context-formatting experiment: the same run under preserve-bullets
/// and comma-joined rendering (scripted labels "format-bullets" and
/// "format-comma").
FormatComparison run_format_comparison(const std::vector<MultipleChoiceQuestion>& test,
                                       const CorpusTable& corpus, const VectorStore& store,
                                       const PipelineBackends& backends, const Tokenizer& tok,
                                       const RunOptions& opts);

// Report serialization. All writers are deterministic byte-for-byte.
std::string records_jsonl(const EvaluationReport& report);
void write_records_jsonl(const EvaluationReport& report, const std::filesystem::path& path);
std::string summary_table_text(const std::vector<EvaluationReport>& reports);
std::string summary_table_csv(const std::vector<EvaluationReport>& reports);
std::string format_comparison_text(const FormatComparison& cmp);

}  // namespace contextqa

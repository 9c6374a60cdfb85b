#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contextqa/corpus.hpp"
#include "contextqa/question.hpp"
#include "contextqa/retrieval.hpp"
#include "contextqa/tokenizer.hpp"

namespace contextqa {

struct PromptBudget {
  int model_max_tokens = 2048;
  int context_budget_tokens = 0;
  int reserved_completion_tokens = 64;
};

enum class QuestionLayout { Multiline, Inline };

struct IncludedSection {
  std::string section_id;
  std::string rendered_text;
  int token_count = 0;
};

struct SkippedSection {
  std::string section_id;
  int token_count = 0;
};

struct AssembledPrompt {
  std::string header;  // empty in the no-context condition
  std::vector<IncludedSection> included_sections;
  std::string question_block;
  int context_tokens = 0;  // sum of included section token counts
  int total_tokens = 0;    // token count of the full rendered prompt
  std::optional<SkippedSection> skipped_first_overflow;
};

/// The fixed hallucination-guard statement placed at the top of every
/// context-bearing prompt.
const std::string& guard_header();

/// Multiline: stem, then one "<label>. <text>" line per choice.
/// Inline: stem and choices on one line separated by single spaces.
std::string render_question(const MultipleChoiceQuestion& q, QuestionLayout layout);

/// Greedy packing of ranked sections under the context budget: sections are
/// taken whole in rank order and packing stops at the first section that
/// does not fit (no skip-ahead, no mid-section truncation). The assembled
/// prompt always renders within model_max_tokens - reserved_completion_tokens.
AssembledPrompt assemble_prompt(const std::vector<RankedSection>& ranked, const CorpusTable& corpus,
                                const MultipleChoiceQuestion& question, const PromptBudget& budget,
                                FormattingMode mode, const Tokenizer& tok,
                                QuestionLayout layout = QuestionLayout::Multiline);

/// The no-context condition: no guard header, no sections, question only.
AssembledPrompt assemble_no_context_prompt(const MultipleChoiceQuestion& question,
                                           const Tokenizer& tok,
                                           QuestionLayout layout = QuestionLayout::Multiline);

/// Deterministic byte-exact layout: header line, blank line, each section as
/// "Context:\n<text>" separated by blank lines, blank line, "Question:\n
/// <question block>", trailing "Answer:" line.
std::string render_prompt(const AssembledPrompt& p);

}  // namespace contextqa

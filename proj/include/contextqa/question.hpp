#pragma once

#include <string>
#include <vector>

namespace contextqa {

struct Choice {
  std::string label;  // single letter, "a" onward
  std::string text;
};

struct MultipleChoiceQuestion {
  int id = 0;
  std::string stem;
  std::vector<Choice> choices;  // empty for free-text / choice-removal forms
  std::string correct_label;
};

/// Test-file validation: 2-26 choices, labels consecutive from "a",
/// correct label present. Throws InputError.
void validate_question(const MultipleChoiceQuestion& q);

}  // namespace contextqa

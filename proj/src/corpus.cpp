#include "contextqa/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "contextqa/errors.hpp"

namespace contextqa {

namespace {

using nlohmann::json;

const std::vector<std::string> kCorpusHeader = {"id", "title", "heading", "content", "tokens"};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::vector<std::string>> parse_csv(const std::string& data) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < data.size(); ++i) {
    char c = data[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_row();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<DocumentSection> load_csv_rows(const std::filesystem::path& path,
                                           const std::string& data) {
  auto rows = parse_csv(data);
  if (rows.empty()) {
    throw InputError(path.string() + ": missing header row");
  }
  if (rows.front() != kCorpusHeader) {
    throw InputError(path.string() + ": header must be 'id,title,heading,content,tokens'");
  }
  std::vector<DocumentSection> sections;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != kCorpusHeader.size()) {
      throw InputError(path.string() + ": row " + std::to_string(r) + ": expected " +
                       std::to_string(kCorpusHeader.size()) + " columns, got " +
                       std::to_string(row.size()));
    }
    DocumentSection s;
    s.id = row[0];
    s.title = row[1];
    s.heading = row[2];
    s.content = row[3];
    if (s.id.empty()) {
      throw InputError(path.string() + ": row " + std::to_string(r) + ": empty id");
    }
    if (trim(s.content).empty()) {
      throw InputError(path.string() + ": row " + std::to_string(r) + ": empty content cell");
    }
    sections.push_back(std::move(s));
  }
  return sections;
}

std::vector<DocumentSection> load_jsonl_rows(const std::filesystem::path& path,
                                             std::istream& in) {
  std::vector<DocumentSection> sections;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    for (const char* key : {"id", "title", "heading", "content"}) {
      if (!rec.contains(key) || !rec[key].is_string()) {
        throw InputError(path.string() + ":" + std::to_string(line_no) +
                         ": missing string field '" + key + "'");
      }
    }
    DocumentSection s;
    s.id = rec["id"].get<std::string>();
    s.title = rec["title"].get<std::string>();
    s.heading = rec["heading"].get<std::string>();
    s.content = rec["content"].get<std::string>();
    if (trim(s.content).empty()) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": empty content cell");
    }
    sections.push_back(std::move(s));
  }
  return sections;
}

std::string slugify(const std::string& text) {
  std::string out;
  bool dash_pending = false;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (dash_pending && !out.empty()) out.push_back('-');
      dash_pending = false;
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      dash_pending = true;
    }
  }
  return out.empty() ? "section" : out;
}

std::vector<std::string> split_paragraphs(const std::string& text) {
  std::vector<std::string> paragraphs;
  std::string current;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    std::string p = trim(current);
    if (!p.empty()) paragraphs.push_back(std::move(p));
    current.clear();
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      flush();
    } else {
      if (!current.empty()) current.push_back('\n');
      current += line;
    }
  }
  flush();
  return paragraphs;
}

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 == text.size() || is_space(text[i + 1]))) {
      std::string s = trim(text.substr(start, i + 1 - start));
      if (!s.empty()) sentences.push_back(std::move(s));
      start = i + 1;
    }
  }
  if (start < text.size()) {
    std::string s = trim(text.substr(start));
    if (!s.empty()) sentences.push_back(std::move(s));
  }
  return sentences;
}

// Hard split of a single overlong span at token boundaries.
std::vector<std::string> split_at_token_limit(const std::string& text, int max_tokens,
                                              const Tokenizer& tok) {
  std::vector<std::string> pieces;
  std::string rest = text;
  while (!rest.empty()) {
    std::string prefix = tok.truncate(rest, max_tokens);
    if (prefix.empty()) break;  // untokenizable residue
    pieces.push_back(trim(prefix));
    rest = trim(rest.substr(prefix.size()));
  }
  return pieces;
}

std::vector<std::string> split_oversized_paragraph(const std::string& paragraph, int max_tokens,
                                                   const Tokenizer& tok) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(current);
    current.clear();
  };
  for (const auto& sentence : split_sentences(paragraph)) {
    if (tok.count(sentence) > max_tokens) {
      flush();
      for (auto& piece : split_at_token_limit(sentence, max_tokens, tok)) {
        out.push_back(std::move(piece));
      }
      continue;
    }
    std::string candidate = current.empty() ? sentence : current + " " + sentence;
    if (tok.count(candidate) <= max_tokens) {
      current = std::move(candidate);
    } else {
      flush();
      current = sentence;
    }
  }
  flush();
  return out;
}

bool line_is_bullet(std::string_view line, std::string_view* item_out) {
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  std::string_view rest = line.substr(i);
  for (std::string_view marker : {std::string_view("- "), std::string_view("* "),
                                  std::string_view("\xE2\x80\xA2 ")}) {
    if (rest.size() > marker.size() && rest.substr(0, marker.size()) == marker) {
      if (item_out) *item_out = rest.substr(marker.size());
      return true;
    }
  }
  return false;
}

}  // namespace

CorpusTable::CorpusTable(std::vector<DocumentSection> sections, TokenizerSpec tokenizer_spec)
    : sections_(std::move(sections)), tokenizer_spec_(std::move(tokenizer_spec)) {
  for (std::size_t i = 0; i < sections_.size(); ++i) {
    const auto& s = sections_[i];
    if (trim(s.content).empty()) {
      throw InputError("section '" + s.id + "' has empty content");
    }
    if (!index_.emplace(s.id, i).second) {
      throw InputError("duplicate section id '" + s.id + "'");
    }
  }
}

const DocumentSection* CorpusTable::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &sections_[it->second];
}

CorpusTable load_corpus(const std::filesystem::path& path, const Tokenizer& tok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open corpus file: " + path.string());
  }
  std::vector<DocumentSection> sections;
  auto ext = path.extension().string();
  if (ext == ".jsonl" || ext == ".ndjson") {
    sections = load_jsonl_rows(path, in);
  } else {
    std::ostringstream buf;
    buf << in.rdbuf();
    sections = load_csv_rows(path, buf.str());
  }
  // Stored counts are advisory; recount with the active tokenizer.
  for (auto& s : sections) {
    s.token_count = tok.count(s.content);
  }
  return CorpusTable(std::move(sections), tok.spec());
}

void write_corpus(const CorpusTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write corpus file: " + path.string());
  }
  out << "id,title,heading,content,tokens\n";
  for (const auto& s : table.sections()) {
    out << csv_quote(s.id) << ',' << csv_quote(s.title) << ',' << csv_quote(s.heading) << ','
        << csv_quote(s.content) << ',' << s.token_count << '\n';
  }
}

std::vector<DocumentSection> chunk_text(const std::string& title, const std::string& heading,
                                        const std::string& raw, int max_tokens,
                                        const Tokenizer& tok) {
  if (max_tokens < 16) {
    throw InputError("chunk_text: max_tokens must be at least 16");
  }
  if (trim(raw).empty()) {
    throw InputError("chunk_text: input is empty");
  }

  std::vector<std::string> chunks;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) chunks.push_back(current);
    current.clear();
  };

  for (const auto& paragraph : split_paragraphs(raw)) {
    if (tok.count(paragraph) > max_tokens) {
      flush();
      for (auto& piece : split_oversized_paragraph(paragraph, max_tokens, tok)) {
        chunks.push_back(std::move(piece));
      }
      continue;
    }
    std::string candidate = current.empty() ? paragraph : current + "\n\n" + paragraph;
    if (tok.count(candidate) <= max_tokens) {
      current = std::move(candidate);
    } else {
      flush();
      current = paragraph;
    }
  }
  flush();

  std::string base = slugify(heading.empty() ? title : heading);
  std::vector<DocumentSection> sections;
  sections.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    DocumentSection s;
    s.id = chunks.size() == 1 ? base : base + "-" + std::to_string(i + 1);
    s.title = title;
    s.heading = heading;
    s.content = std::move(chunks[i]);
    s.token_count = tok.count(s.content);
    sections.push_back(std::move(s));
  }
  return sections;
}

std::string render_text(const std::string& content, FormattingMode mode) {
  if (mode == FormattingMode::PreserveBullets) return content;

  bool trailing_newline = !content.empty() && content.back() == '\n';
  std::vector<std::string> lines;
  std::string line;
  for (char c : content) {
    if (c == '\n') {
      lines.push_back(std::move(line));
      line.clear();
    } else {
      line.push_back(c);
    }
  }
  if (!line.empty()) lines.push_back(std::move(line));

  std::vector<std::string> out;
  std::vector<std::string> run;
  auto flush_run = [&] {
    if (run.empty()) return;
    std::string joined;
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (i > 0) joined += ", ";
      joined += run[i];
    }
    if (!joined.empty() && joined.back() != '.') joined.push_back('.');
    if (!out.empty() && !trim(out.back()).empty()) {
      out.back() += " " + joined;
    } else {
      out.push_back(joined);
    }
    run.clear();
  };

  for (const auto& l : lines) {
    std::string_view item;
    if (line_is_bullet(l, &item)) {
      // Trailing whitespace on an item would leak into the joined run.
      std::size_t e = item.size();
      while (e > 0 && is_space(item[e - 1])) --e;
      run.emplace_back(item.substr(0, e));
    } else {
      flush_run();
      out.push_back(l);
    }
  }
  flush_run();

  std::string result;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0) result.push_back('\n');
    result += out[i];
  }
  if (trailing_newline) result.push_back('\n');
  return result;
}

std::string render_content(const DocumentSection& section, FormattingMode mode) {
  return render_text(section.content, mode);
}

}  // namespace contextqa

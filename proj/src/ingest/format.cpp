//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "iaa/ingest/format.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>

namespace iaa::ingest {

namespace {

constexpr std::array<std::string_view, 5> kCsvHeader{"participant_id", "group", "word", "left", "right"};

std::optional<double> parse_decimal(std::string_view field)
{
  auto const text = trimmed(field);
  if (text.empty())
  {
    return std::nullopt;
  }
  double     value = 0.0;
  auto const first = text.data();
  auto const last  = text.data() + text.size();
  auto const [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value))
  {
    return std::nullopt;
  }
  return value;
}

// Splits one CSV line into fields. Double-quoted fields may contain commas
// and doubled quotes. Returns nullopt on an unterminated or misplaced quote.
std::optional<std::vector<std::string>> split_csv_line(std::string_view line)
{
  std::vector<std::string> fields;
  std::string              current;
  std::size_t              i = 0;
  while (true)
  {
    current.clear();
    // skip whitespace before a possible opening quote
    std::size_t j = i;
    while (j < line.size() && (line[j] == ' ' || line[j] == '\t'))
    {
      ++j;
    }
    if (j < line.size() && line[j] == '"')
    {
      i = j + 1;
      bool closed = false;
      while (i < line.size())
      {
        if (line[i] == '"')
        {
          if (i + 1 < line.size() && line[i + 1] == '"')
          {
            current.push_back('"');
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        current.push_back(line[i++]);
      }
      if (!closed)
      {
        return std::nullopt;
      }
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      {
        ++i;
      }
      if (i < line.size() && line[i] != ',')
      {
        return std::nullopt;
      }
    }
    else
    {
      while (i < line.size() && line[i] != ',')
      {
        if (line[i] == '"')
        {
          return std::nullopt;
        }
        current.push_back(line[i++]);
      }
    }
    fields.push_back(current);
    if (i >= line.size())
    {
      break;
    }
    ++i;  // comma
  }
  return fields;
}

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view input)
{
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t                                           number = 1;
  while (!input.empty())
  {
    auto const  end  = input.find_first_of("\r\n");
    auto const  line = input.substr(0, end);
    lines.emplace_back(number++, line);
    if (end == std::string_view::npos)
    {
      break;
    }
    std::size_t skip = 1;
    if (input[end] == '\r' && end + 1 < input.size() && input[end + 1] == '\n')
    {
      skip = 2;
    }
    input.remove_prefix(end + skip);
  }
  return lines;
}

bool is_valid_utf8(std::string_view text)
{
  std::size_t i = 0;
  while (i < text.size())
  {
    auto const  c = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    std::uint32_t code = 0;
    if (c < 0x80)
    {
      ++i;
      continue;
    }
    if ((c & 0xE0) == 0xC0)
    {
      extra = 1;
      code  = c & 0x1F;
    }
    else if ((c & 0xF0) == 0xE0)
    {
      extra = 2;
      code  = c & 0x0F;
    }
    else if ((c & 0xF8) == 0xF0)
    {
      extra = 3;
      code  = c & 0x07;
    }
    else
    {
      return false;
    }
    if (i + extra >= text.size())
    {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k)
    {
      auto const cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80)
      {
        return false;
      }
      code = (code << 6) | (cc & 0x3F);
    }
    // overlong forms, surrogates and out-of-range code points
    constexpr std::uint32_t kMinimum[] = {0, 0x80, 0x800, 0x10000};
    if (code < kMinimum[extra] || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF))
    {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

bool is_blank(std::string_view line)
{
  return trimmed(line).empty();
}

std::vector<std::string> words_in_first_appearance_order(std::vector<ResponseRecord> const &records)
{
  std::vector<std::string> words;
  for (auto const &r : records)
  {
    if (std::find(words.begin(), words.end(), r.word) == words.end())
    {
      words.push_back(r.word);
    }
  }
  return words;
}

void finish(ValidationReport &report, core::DomainGrid const &grid, std::vector<std::string> words,
            std::vector<ResponseRecord> records, std::vector<std::size_t> const &lines)
{
  auto more = find_issues(grid, words, records, lines);
  report.issues.insert(report.issues.end(), more.begin(), more.end());
  if (report.issues.empty())
  {
    report.dataset = Dataset::create(grid, std::move(words), std::move(records));
  }
}

ValidationReport check_csv(std::string_view input, ParseOptions const &options)
{
  ValidationReport report;
  if (input.substr(0, 3) == "\xEF\xBB\xBF")
  {
    input.remove_prefix(3);
  }

  auto const lines  = split_lines(input);
  auto       cursor = lines.begin();
  while (cursor != lines.end() && is_blank(cursor->second))
  {
    ++cursor;
  }
  if (cursor == lines.end())
  {
    report.issues.push_back({ErrorCode::ParseError, "missing CSV header row", 1, "", ""});
    return report;
  }

  auto const header = split_csv_line(cursor->second);
  bool       header_ok = header && header->size() == kCsvHeader.size();
  for (std::size_t c = 0; header_ok && c < kCsvHeader.size(); ++c)
  {
    header_ok = canonical_word((*header)[c]) == kCsvHeader[c];
  }
  if (!header_ok)
  {
    report.issues.push_back(
        {ErrorCode::ParseError, "header must be 'participant_id,group,word,left,right'", cursor->first, "", ""});
    return report;
  }
  ++cursor;

  std::vector<ResponseRecord> records;
  std::vector<std::size_t>    record_lines;
  for (; cursor != lines.end(); ++cursor)
  {
    auto const [number, line] = *cursor;
    if (is_blank(line))
    {
      continue;
    }
    if (!is_valid_utf8(line))
    {
      report.issues.push_back({ErrorCode::ParseError, "line is not valid UTF-8", number, "", ""});
      continue;
    }
    auto const fields = split_csv_line(line);
    if (!fields)
    {
      report.issues.push_back({ErrorCode::ParseError, "unbalanced quotes", number, "", ""});
      continue;
    }
    if (fields->size() != kCsvHeader.size())
    {
      std::ostringstream os;
      os << "expected 5 fields, found " << fields->size();
      report.issues.push_back({ErrorCode::ParseError, os.str(), number, "", ""});
      continue;
    }

    auto const participant = trimmed((*fields)[0]);
    auto const group       = trimmed((*fields)[1]);
    auto const word        = canonical_word((*fields)[2]);
    auto const left        = parse_decimal((*fields)[3]);
    auto const right       = parse_decimal((*fields)[4]);
    if (!left || !right)
    {
      std::string const which = !left ? "left" : "right";
      report.issues.push_back({ErrorCode::ParseError,
                               "field '" + which + "' is not a decimal number: '" +
                                   trimmed((*fields)[!left ? 3 : 4]) + "'",
                               number, participant, word});
      continue;
    }
    if (*left > *right)
    {
      std::ostringstream os;
      os << "left endpoint " << *left << " exceeds right endpoint " << *right;
      report.issues.push_back({ErrorCode::InvalidInterval, os.str(), number, participant, word});
      continue;
    }
    records.push_back({participant, group, word, core::Interval{*left, *right}});
    record_lines.push_back(number);
  }

  std::vector<std::string> words;
  for (auto const &w : options.words)
  {
    words.push_back(canonical_word(w));
  }
  if (words.empty())
  {
    words = words_in_first_appearance_order(records);
  }
  finish(report, options.grid, std::move(words), std::move(records), record_lines);
  return report;
}

using json = nlohmann::json;

ValidationReport check_json(std::string_view input, ParseOptions const &options)
{
  ValidationReport report;
  json             doc;
  try
  {
    doc = json::parse(input.begin(), input.end());
  }
  catch (json::parse_error const &e)
  {
    std::ostringstream os;
    os << "malformed JSON at byte " << e.byte;
    report.issues.push_back({ErrorCode::ParseError, os.str(), 0, "", ""});
    return report;
  }

  auto const fatal = [&](std::string message) {
    report.issues.push_back({ErrorCode::ParseError, std::move(message), 0, "", ""});
    return report;
  };

  if (!doc.is_object())
  {
    return fatal("top-level JSON value must be an object");
  }

  core::DomainGrid grid = options.grid;
  if (auto it = doc.find("scale"); it != doc.end())
  {
    if (!it->is_object())
    {
      return fatal("'scale' must be an object");
    }
    std::array<double, 3> values{grid.min(), grid.max(), grid.step()};
    std::array<char const *, 3> const keys{"min", "max", "step"};
    for (std::size_t k = 0; k < keys.size(); ++k)
    {
      if (auto v = it->find(keys[k]); v != it->end())
      {
        if (!v->is_number())
        {
          return fatal(std::string{"'scale."} + keys[k] + "' must be a number");
        }
        values[k] = v->get<double>();
      }
    }
    try
    {
      grid = core::DomainGrid{values[0], values[1], values[2]};
    }
    catch (Error const &e)
    {
      report.issues.push_back({e.code(), e.what(), 0, "", ""});
      return report;
    }
  }

  std::vector<std::string> words;
  if (auto it = doc.find("words"); it != doc.end())
  {
    if (!it->is_array())
    {
      return fatal("'words' must be an array of strings");
    }
    for (auto const &w : *it)
    {
      if (!w.is_string())
      {
        return fatal("'words' must be an array of strings");
      }
      words.push_back(canonical_word(w.get_ref<std::string const &>()));
    }
  }
  else
  {
    for (auto const &w : options.words)
    {
      words.push_back(canonical_word(w));
    }
  }

  auto const responses = doc.find("responses");
  if (responses == doc.end() || !responses->is_array())
  {
    return fatal("'responses' must be an array");
  }

  std::vector<ResponseRecord> records;
  std::vector<std::size_t>    record_lines;
  std::size_t                 index = 0;
  for (auto const &item : *responses)
  {
    ++index;
    std::ostringstream where;
    where << "responses[" << index - 1 << "]";
    if (!item.is_object())
    {
      report.issues.push_back({ErrorCode::ParseError, where.str() + " must be an object", index, "", ""});
      continue;
    }

    std::array<std::string, 3>        text;
    std::array<char const *, 3> const text_keys{"participant_id", "group", "word"};
    std::array<double, 2>             ends{};
    std::array<char const *, 2> const end_keys{"left", "right"};
    std::optional<std::string>        problem;
    for (std::size_t k = 0; k < text_keys.size() && !problem; ++k)
    {
      auto v = item.find(text_keys[k]);
      if (v == item.end() || !v->is_string())
      {
        problem = where.str() + "." + text_keys[k] + " must be a string";
      }
      else
      {
        text[k] = v->get<std::string>();
      }
    }
    for (std::size_t k = 0; k < end_keys.size() && !problem; ++k)
    {
      auto v = item.find(end_keys[k]);
      if (v == item.end() || !v->is_number() || !std::isfinite(v->get<double>()))
      {
        problem = where.str() + "." + end_keys[k] + " must be a finite number";
      }
      else
      {
        ends[k] = v->get<double>();
      }
    }

    auto const participant = trimmed(text[0]);
    auto const word        = canonical_word(text[2]);
    if (problem)
    {
      report.issues.push_back({ErrorCode::ParseError, *problem, index, participant, word});
      continue;
    }
    if (ends[0] > ends[1])
    {
      std::ostringstream os;
      os << "left endpoint " << ends[0] << " exceeds right endpoint " << ends[1];
      report.issues.push_back({ErrorCode::InvalidInterval, os.str(), index, participant, word});
      continue;
    }
    records.push_back({participant, trimmed(text[1]), word, core::Interval{ends[0], ends[1]}});
    record_lines.push_back(index);
  }

  if (words.empty())
  {
    words = words_in_first_appearance_order(records);
  }
  finish(report, grid, std::move(words), std::move(records), record_lines);
  return report;
}

bool needs_quoting(std::string_view field)
{
  return field.find_first_of(",\"\r\n") != std::string_view::npos ||
         (!field.empty() && (field.front() == ' ' || field.back() == ' ' || field.front() == '\t' ||
                             field.back() == '\t'));
}

std::string csv_field(std::string_view field)
{
  if (!needs_quoting(field))
  {
    return std::string{field};
  }
  std::string out = "\"";
  for (char c : field)
  {
    if (c == '"')
    {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Format parse_format(std::string_view name)
{
  auto const lowered = canonical_word(name);
  if (lowered == "csv")
  {
    return Format::Csv;
  }
  if (lowered == "json")
  {
    return Format::Json;
  }
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string{name} + "' (expected csv or json)");
}

std::optional<Format> format_from_extension(std::string_view path)
{
  auto const dot = path.rfind('.');
  if (dot == std::string_view::npos)
  {
    return std::nullopt;
  }
  auto const ext = canonical_word(path.substr(dot + 1));
  if (ext == "csv")
  {
    return Format::Csv;
  }
  if (ext == "json")
  {
    return Format::Json;
  }
  return std::nullopt;
}

ValidationReport check_dataset(std::string_view input, Format format, ParseOptions const &options)
{
  return format == Format::Csv ? check_csv(input, options) : check_json(input, options);
}

Dataset parse_dataset(std::string_view input, Format format, ParseOptions const &options)
{
  auto report = check_dataset(input, format, options);
  if (!report.ok())
  {
    throw Error(report.issues.front().code, report.issues.front().describe());
  }
  return std::move(*report.dataset);
}

Dataset parse_dataset(std::istream &input, Format format, ParseOptions const &options)
{
  std::string const buffer{std::istreambuf_iterator<char>{input}, std::istreambuf_iterator<char>{}};
  if (input.bad())
  {
    throw Error(ErrorCode::Io, "failed to read dataset stream");
  }
  return parse_dataset(buffer, format, options);
}

std::string format_number(double value)
{
  std::array<char, 64> buffer{};
  auto const [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

std::string serialize_csv(Dataset const &ds)
{
  std::string out = "participant_id,group,word,left,right\n";
  for (auto const &r : ds.records())
  {
    out += csv_field(r.participant_id);
    out += ',';
    out += csv_field(r.group);
    out += ',';
    out += csv_field(r.word);
    out += ',';
    out += format_number(r.interval.left());
    out += ',';
    out += format_number(r.interval.right());
    out += '\n';
  }
  return out;
}

std::string serialize_json(Dataset const &ds)
{
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["scale"] = ojson{{"min", ds.grid().min()}, {"max", ds.grid().max()}, {"step", ds.grid().step()}};
  doc["words"] = ds.words();
  auto &responses = doc["responses"] = ojson::array();
  for (auto const &r : ds.records())
  {
    responses.push_back(ojson{{"participant_id", r.participant_id},
                              {"group", r.group},
                              {"word", r.word},
                              {"left", r.interval.left()},
                              {"right", r.interval.right()}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace iaa::ingest

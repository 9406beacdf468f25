#include "stylo/genharness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "stylo/corpus.hpp"
#include "stylo/csv.hpp"
#include "stylo/io.hpp"

namespace stylo {

using nlohmann::json;

namespace {

bool safe_component(std::string_view id) {
  if (id.empty() || id == "." || id == ".." || id.front() == '.') return false;
  return id.find_first_of("/\\") == std::string_view::npos && id.find('\0') == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Block {
  std::string tag;
  std::string body;
};

std::vector<Block> fenced_blocks(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view opener = trim(lines[i]);
    if (!opener.starts_with("```")) continue;
    Block b;
    const std::string_view info = trim(opener.substr(3));
    b.tag = lower(info.substr(0, info.find_first_of(" \t{")));
    std::size_t j = i + 1;
    for (; j < lines.size(); ++j) {
      const std::string_view t = trim(lines[j]);
      if (t.starts_with("```") && trim(t.substr(3)).empty()) break;
      b.body.append(lines[j]);
      b.body.push_back('\n');
    }
    blocks.push_back(std::move(b));
    i = j;
  }
  return blocks;
}

}  // namespace

std::vector<PromptRecord> parse_manifest(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw SchemaMismatch("manifest is empty");
  const csv::Row expected = {"id", "category", "preamble", "prompt", "output_formatting", "exporting"};
  if (rows[0] != expected) throw SchemaMismatch("manifest header must be: " + std::string(kManifestHeader));
  std::vector<PromptRecord> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != expected.size()) {
      throw SchemaMismatch("manifest row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                           " fields, expected 6");
    }
    PromptRecord rec;
    rec.id = row[0];
    if (!safe_component(rec.id)) throw SchemaMismatch("manifest id is not a valid directory name: " + rec.id);
    const auto cat = parse_category(row[1]);
    if (!cat) throw UnknownCategory("unknown category in manifest: " + row[1]);
    rec.category = *cat;
    rec.preamble = row[2];
    rec.prompt = row[3];
    rec.output_formatting = row[4];
    rec.exporting = row[5];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PromptRecord> read_manifest(const std::filesystem::path& path) { return parse_manifest(read_file(path)); }

std::string format_manifest(const std::vector<PromptRecord>& records) {
  std::string out = std::string(kManifestHeader) + "\n";
  for (const auto& r : records) {
    out += csv::format_row(
        {r.id, std::string(to_string(r.category)), r.preamble, r.prompt, r.output_formatting, r.exporting});
  }
  return out;
}

std::string render_prompt(const PromptRecord& record) {
  std::string out;
  for (const std::string* part : {&record.preamble, &record.prompt, &record.output_formatting, &record.exporting}) {
    if (part->empty()) continue;
    if (!out.empty()) out += "\n\n";
    out += *part;
  }
  return out;
}

std::string extract_code(std::string_view response) {
  const auto blocks = fenced_blocks(response);
  if (blocks.empty()) throw NoCodeBlock("response contains no fenced code block");
  for (const auto& b : blocks) {
    if (b.tag == "python" || b.tag == "py" || b.tag == "python3") return b.body;
  }
  return blocks.front().body;
}

void EndpointConfig::validate() const {
  if (base_url.empty()) throw UsageError("endpoint base URL is required");
  if (model.empty()) throw UsageError("endpoint model name is required");
  if (token_env.empty()) throw UsageError("token environment variable name is required");
  if (!(timeout_seconds > 0.0)) throw UsageError("timeout must be > 0");
  if (max_retries < 0) throw UsageError("retries must be >= 0");
}

std::string build_chat_request_body(std::string_view model, std::string_view content) {
  const json body = {{"model", model}, {"messages", json::array({{{"role", "user"}, {"content", content}}})}};
  return body.dump();
}

std::string parse_chat_response(std::string_view body) {
  try {
    const json j = json::parse(body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    throw TransportError("unexpected chat-completion response shape");
  }
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Written: return "written";
    case Outcome::TransportFailed: return "transport-failed";
    case Outcome::NoCodeBlock: return "no-code-block";
  }
  return "?";
}

std::size_t GenerationLog::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const LogEntry& e) { return e.outcome == o; }));
}

json to_json(const GenerationLog& log) {
  json entries = json::array();
  for (const auto& e : log.entries) {
    json row = {{"id", e.id},
                {"category", to_string(e.category)},
                {"outcome", to_string(e.outcome)},
                {"retries", e.retries}};
    if (!e.path.empty()) row["path"] = e.path;
    if (!e.message.empty()) row["message"] = e.message;
    entries.push_back(std::move(row));
  }
  return {{"entries", entries},
          {"written", log.count(Outcome::Written)},
          {"transport_failed", log.count(Outcome::TransportFailed)},
          {"no_code_block", log.count(Outcome::NoCodeBlock)}};
}

GenerationLog batch_generate(const std::vector<PromptRecord>& manifest, ChatEndpoint& endpoint,
                             const std::filesystem::path& corpus_root, const BatchOptions& options) {
  if (options.max_retries < 0) throw UsageError("retries must be >= 0");
  auto sleep = options.sleep ? options.sleep : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };

  GenerationLog log;
  log.entries.resize(manifest.size());
  auto run_one = [&](std::size_t i) {
    const PromptRecord& rec = manifest[i];
    LogEntry& entry = log.entries[i];
    entry.id = rec.id;
    entry.category = rec.category;
    const std::string request = render_prompt(rec);
    std::string response;
    auto delay = options.initial_backoff;
    for (int attempt = 0;; ++attempt) {
      try {
        response = endpoint.complete(request);
        break;
      } catch (const TransportError& e) {
        if (attempt >= options.max_retries) {
          entry.outcome = Outcome::TransportFailed;
          entry.message = e.what();
          return;
        }
        ++entry.retries;
        sleep(delay);
        delay = std::chrono::milliseconds(
            static_cast<std::chrono::milliseconds::rep>(static_cast<double>(delay.count()) * options.backoff_factor));
      } catch (const Error& e) {
        entry.outcome = Outcome::TransportFailed;
        entry.message = e.what();
        return;
      }
    }
    try {
      const std::string code = extract_code(response);
      const auto path = corpus_root / to_string(rec.category) / rec.id / kChatGptFile;
      write_file_atomic(path, code);
      entry.outcome = Outcome::Written;
      entry.path = path.string();
    } catch (const NoCodeBlock& e) {
      entry.outcome = Outcome::NoCodeBlock;
      entry.message = e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.concurrency, manifest.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < manifest.size(); i = next.fetch_add(1)) {
          try {
            run_one(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  if (!manifest.empty() && log.count(Outcome::Written) == 0) {
    throw GenerationFailed("all " + std::to_string(manifest.size()) + " prompts failed");
  }
  return log;
}

}  // namespace stylo

#include "safetrust/cli/scenario_file.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace safetrust::cli {

ScenarioError::ScenarioError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return buf.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class Parser {
 public:
  sim::Scenario parse(std::string_view text);

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ScenarioError(line_, message); }

  double real(std::string_view key, std::string_view v) const;
  std::uint64_t integer(std::string_view key, std::string_view v) const;
  bool boolean(std::string_view key, std::string_view v) const;
  sim::Address address(std::string_view key, std::string_view v) const { return static_cast<sim::Address>(integer(key, v)); }

  void assign(std::string_view section, std::string_view key, std::string_view value);
  void parse_list_line(std::string_view section, std::string_view line);
  sim::LinkTarget parse_target(std::string_view key, std::string_view v) const;
  bool patch_field(sim::TruthPatch& patch, std::string_view key, std::string_view v) const;

  std::size_t line_for(const sim::InvalidScenario& e) const;

  sim::Scenario s_;
  std::size_t line_ = 0;
  bool init_given_ = false;
  std::map<std::string, std::size_t, std::less<>> key_lines_;
  std::vector<std::size_t> override_lines_, truth_event_lines_, kill_lines_;
};

double Parser::real(std::string_view key, std::string_view v) const {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
    fail(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t Parser::integer(std::string_view key, std::string_view v) const {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
    fail(std::string(key) + ": expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool Parser::boolean(std::string_view key, std::string_view v) const {
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail(std::string(key) + ": expected true or false, got '" + std::string(v) + "'");
}

bool Parser::patch_field(sim::TruthPatch& patch, std::string_view key, std::string_view v) const {
  if (key == "link_quality") patch.link_quality = real(key, v);
  else if (key == "tx_rate_bps") patch.tx_rate_bps = real(key, v);
  else if (key == "response_time_ms") patch.response_time_ms = real(key, v);
  else if (key == "uptime") patch.uptime = real(key, v);
  else if (key == "noise") patch.noise = real(key, v);
  else return false;
  return true;
}

sim::LinkTarget Parser::parse_target(std::string_view key, std::string_view v) const {
  if (key == "peer") return sim::PeerLinks{address(key, v)};
  const auto ends = split(v, '-');
  if (ends.size() != 2) fail("link: expected <a>-<b>, got '" + std::string(v) + "'");
  return sim::LinkPair{address(key, ends[0]), address(key, ends[1])};
}

void Parser::assign(std::string_view section, std::string_view key, std::string_view v) {
  const std::string full = std::string(section) + "." + std::string(key);
  if (!key_lines_.emplace(full, line_).second) fail(std::string(key) + ": given twice in [" + std::string(section) + "]");

  auto& a = s_.analysis;
  auto& e = s_.energy;
  if (section == "network") {
    if (key == "motes") s_.motes = integer(key, v);
    else if (key == "topology") {
      const auto t = sim::parse_topology(v);
      if (!t) fail("topology: expected ring, grid or random, got '" + std::string(v) + "'");
      s_.topology = *t;
    } else if (key == "radius") s_.radius = real(key, v);
    else if (key == "seed") s_.seed = integer(key, v);
    else fail("unknown key '" + std::string(key) + "' in [network]");
  } else if (section == "rwp") {
    if (key == "intervals") s_.intervals = static_cast<int>(std::min<std::uint64_t>(integer(key, v), 1'000'000'000));
    else if (key == "theta_base_s") s_.theta_base_s = real(key, v);
    else if (key == "theta_min_s") s_.theta_min_s = real(key, v);
    else if (key == "theta_max_s") s_.theta_max_s = real(key, v);
    else if (key == "failover") s_.failover = boolean(key, v);
    else if (key == "architecture") {
      const auto arch = sim::parse_architecture(v);
      if (!arch) fail("architecture: expected p2p or sink, got '" + std::string(v) + "'");
      s_.architecture = *arch;
    } else fail("unknown key '" + std::string(key) + "' in [rwp]");
  } else if (section == "trust") {
    if (key == "engine") {
      const auto eng = sim::parse_engine(v);
      if (!eng) fail("engine: expected qad, beta or bayes, got '" + std::string(v) + "'");
      s_.engine = *eng;
    } else if (key == "misbehavior_threshold") a.misbehavior_threshold = real(key, v);
    else if (key == "weights") {
      const auto parts = split(v, ',');
      if (parts.size() != 4) fail("weights: expected four comma-separated numbers");
      for (std::size_t i = 0; i < 4; ++i) a.weights[i] = real(key, parts[i]);
    } else if (key == "qad_operator") {
      const auto op = qad::parse_operator(v);
      if (!op) fail("qad_operator: expected d, g, k or h, got '" + std::string(v) + "'");
      s_.qad_operator = *op;
    } else if (key == "ref_tx_rate_bps") a.reference.tx_rate_bps = real(key, v);
    else if (key == "ref_response_ms") a.reference.response_time_ms = real(key, v);
    else if (key == "tw_x") a.tw.x = real(key, v);
    else if (key == "tw_y") a.tw.y = real(key, v);
    else fail("unknown key '" + std::string(key) + "' in [trust]");
  } else if (section == "energy") {
    if (key == "capacity_j") e.capacity_j = real(key, v);
    else if (key == "init_j") {
      e.initial_j = real(key, v);
      init_given_ = true;
    } else if (key == "harvest_j_per_s") e.harvest_j_per_s = real(key, v);
    else if (key == "tx_cost_j") e.costs.tx_j = real(key, v);
    else if (key == "rx_cost_j") e.costs.rx_j = real(key, v);
    else if (key == "compute_cost_j") e.costs.compute_j = real(key, v);
    else fail("unknown key '" + std::string(key) + "' in [energy]");
  } else if (section == "links") {
    double noise = s_.link_noise;
    sim::TruthPatch patch;
    if (!patch_field(patch, key, v)) fail("unknown key '" + std::string(key) + "' in [links]");
    patch.apply(s_.link_defaults, noise);
    s_.link_noise = noise;
  } else {
    fail("key '" + std::string(key) + "' in [" + std::string(section) + "] must use the k=v list form");
  }
}

void Parser::parse_list_line(std::string_view section, std::string_view line) {
  std::optional<int> at;
  std::optional<sim::LinkTarget> target;
  std::optional<std::optional<sim::Address>> kill;
  sim::TruthPatch patch;

  for (auto tok : tokens(line)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) fail("expected key=value, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq);
    const auto v = tok.substr(eq + 1);
    if (key == "at" && section == "events") {
      if (at) fail("at: given twice");
      at = static_cast<int>(std::min<std::uint64_t>(integer(key, v), 1'000'000'000));
    } else if (key == "link" || key == "peer") {
      if (target) fail(std::string(key) + ": only one link or peer per line");
      target = parse_target(key, v);
    } else if (key == "kill" && section == "events") {
      if (kill) fail("kill: given twice");
      kill = v == "hacp" ? std::optional<sim::Address>{} : std::optional<sim::Address>{address(key, v)};
    } else if (!patch_field(patch, key, v)) {
      fail("unknown key '" + std::string(key) + "' in [" + std::string(section) + "]");
    }
  }

  if (section == "links") {
    if (!target) fail("override lines need link=<a>-<b> or peer=<p>");
    s_.link_overrides.push_back({*target, patch});
    override_lines_.push_back(line_);
    return;
  }
  if (!at) fail("event lines need at=<interval>");
  if (kill) {
    if (target || !patch.empty()) fail("kill events take no link fields");
    s_.kill_events.push_back({*at, *kill});
    kill_lines_.push_back(line_);
  } else {
    if (!target) fail("event lines need link=<a>-<b>, peer=<p> or kill=<addr|hacp>");
    s_.truth_events.push_back({*at, *target, patch});
    truth_event_lines_.push_back(line_);
  }
}

std::size_t Parser::line_for(const sim::InvalidScenario& e) const {
  if (e.item()) {
    const auto pick = [&](const std::vector<std::size_t>& lines) {
      return *e.item() < lines.size() ? lines[*e.item()] : std::size_t{0};
    };
    if (e.key() == "links.link") return pick(override_lines_);
    if (e.key() == "events.link") return pick(truth_event_lines_);
    if (e.key() == "events.kill") return pick(kill_lines_);
  }
  auto it = key_lines_.find(e.key());
  return it == key_lines_.end() ? 0 : it->second;
}

sim::Scenario Parser::parse(std::string_view text) {
  static const std::set<std::string_view> kSections{"network", "rwp", "trust", "energy", "links", "events"};
  std::string_view section;
  std::set<std::string_view> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!kSections.count(section)) fail("unknown section [" + std::string(section) + "]");
      if (!seen.insert(section).second) fail("section [" + std::string(section) + "] given twice");
      continue;
    }
    if (section.empty()) fail("key outside any section");

    const bool list_form = section == "events" || line.starts_with("link=") || line.starts_with("peer=");
    if (list_form) {
      parse_list_line(section, line);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) fail("missing key before '='");
    assign(section, key, trim(line.substr(eq + 1)));
  }

  line_ = 0;
  if (!seen.count("network")) fail("missing [network] section");
  if (!init_given_) s_.energy.initial_j = s_.energy.capacity_j;

  try {
    s_.validate();
  } catch (const sim::InvalidScenario& e) {
    throw ScenarioError(line_for(e), e.what());
  }
  return s_;
}

}  // namespace

sim::Scenario parse_scenario(std::string_view text) { return Parser{}.parse(text); }

}  // namespace safetrust::cli

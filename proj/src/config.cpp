// Copyright 2026 The bscap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bscap/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bscap/ambient.hpp"
#include "bscap/regulatory.hpp"

namespace bscap {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct NumberWithUnit {
  double number;
  std::string_view unit;
};

NumberWithUnit split_number(std::string_view v) {
  v = trim(v);
  double number = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), number);
  if (ec != std::errc{} || ptr == v.data()) {
    throw ParseError("expected a number in '" + std::string(v) + "'");
  }
  return {number, trim(v.substr(static_cast<std::size_t>(ptr - v.data())))};
}

[[noreturn]] void bad_unit(std::string_view v, std::string_view expected) {
  throw ParseError("'" + std::string(v) + "' needs a unit suffix: one of " + std::string(expected));
}

int parse_int(std::string_view v) {
  v = trim(v);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ParseError("expected an integer, got '" + std::string(v) + "'");
  }
  return n;
}

bool parse_bool(std::string_view v) {
  v = trim(v);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError("expected true or false, got '" + std::string(v) + "'");
}

double parse_efficiency(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit.empty()) return n;
  if (unit == "%") return n / 100.0;
  bad_unit(v, "none or %");
}

FieldStrengthDbuV parse_field(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit != "dBuV/m") bad_unit(v, "dBuV/m");
  return FieldStrengthDbuV{n};
}

TemperatureKelvin parse_temperature(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit != "K") bad_unit(v, "K");
  return TemperatureKelvin{n};
}

double parse_density(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit != "dBm/Hz") bad_unit(v, "dBm/Hz");
  return n;
}

// Swept bounds are converted to the parameter's column unit.
double parse_sweep_bound(SweepParameter p, std::string_view v) {
  switch (p) {
    case SweepParameter::kR:
    case SweepParameter::kRc:
    case SweepParameter::kRrx:
      return parse_distance(v).value();
    case SweepParameter::kCarrierPower:
      return dbm_from_watts(parse_power(v)).value();
    case SweepParameter::kFrequency:
      return parse_frequency(v).value();
    case SweepParameter::kBandwidth: {
      const auto w = parse_bandwidth(v);
      if (!w) throw ParseError("sweep bounds must be finite");
      return w->value();
    }
    case SweepParameter::kGain:
      return parse_gain(v).value();
    case SweepParameter::kSnr:
      return parse_decibel(v).value();
    case SweepParameter::kField:
      return parse_field(v).value();
  }
  throw ParseError("unknown sweep parameter");
}

// Key/value store that remembers which keys were consumed, so leftovers can
// be reported as unknown for the chosen topology.
class Document {
 public:
  explicit Document(std::string_view text) {
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const std::string key{trim(line.substr(0, eq))};
      const std::string value{trim(line.substr(eq + 1))};
      if (key.empty() || value.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
      }
      if (!entries_.emplace(key, Entry{value, line_no}).second) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      }
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<std::string> take(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    return it->second.value;
  }

  std::string require(const std::string& key) {
    auto v = take(key);
    if (!v) throw ParseError("missing required key '" + key + "'");
    return *v;
  }

  // Parses `key` with `fn`, prefixing errors with the line number.
  template <typename Fn>
  auto parse(const std::string& key, Fn fn) -> decltype(fn(std::string_view{})) {
    const std::string v = require(key);
    try {
      return fn(v);
    } catch (const ParseError& e) {
      throw ParseError(where(key) + e.what());
    } catch (const DomainError& e) {
      throw ParseError(where(key) + e.what());
    }
  }

  template <typename Fn>
  auto parse_or(const std::string& key, Fn fn, decltype(fn(std::string_view{})) fallback)
      -> decltype(fn(std::string_view{})) {
    if (!has(key)) return fallback;
    return parse(key, fn);
  }

  void reject_leftovers() const {
    for (const auto& [key, entry] : entries_) {
      if (!used_.count(key)) {
        throw ParseError("line " + std::to_string(entry.line) + ": unknown or inapplicable key '" + key + "'");
      }
    }
  }

 private:
  struct Entry {
    std::string value;
    std::size_t line;
  };

  std::string where(const std::string& key) const {
    return "line " + std::to_string(entries_.at(key).line) + " (" + key + "): ";
  }

  std::map<std::string, Entry> entries_;
  std::set<std::string> used_;
};

BackscatterDevice parse_device(Document& doc) {
  return BackscatterDevice{doc.parse("device.gain", parse_gain),
                           Efficiency{doc.parse_or("device.efficiency", parse_efficiency, 1.0)}};
}

Decibel parse_noise_figure(Document& doc) { return doc.parse_or("receiver.noise_figure", parse_decibel, Decibel{0.0}); }

AmbientLevel parse_ambient_level(Document& doc, FrequencyHz& f, bool& frequency_from_preset) {
  const int given = doc.has("ambient.field") + doc.has("ambient.power") + doc.has("ambient.preset");
  if (given != 1) {
    throw ParseError("ambient topology needs exactly one of ambient.field, ambient.power, ambient.preset");
  }
  if (doc.has("ambient.field")) return doc.parse("ambient.field", parse_field);
  if (doc.has("ambient.power")) return doc.parse("ambient.power", parse_power);
  const std::string id = doc.require("ambient.preset");
  const AmbientPreset* preset = find_ambient_preset(id);
  if (preset == nullptr) throw ParseError("unknown ambient preset '" + id + "'");
  f = preset->carrier_frequency;
  frequency_from_preset = true;
  return preset->level;
}

}  // namespace

PowerWatts parse_power(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit == "dBm") return watts_from_dbm(PowerDbm{n});
  if (unit == "W") return PowerWatts{n};
  if (unit == "mW") return PowerWatts{n * 1e-3};
  bad_unit(v, "dBm, W, mW");
}

GainDbi parse_gain(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit != "dBi") bad_unit(v, "dBi");
  return GainDbi{n};
}

Decibel parse_decibel(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit != "dB") bad_unit(v, "dB");
  return Decibel{n};
}

FrequencyHz parse_frequency(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit == "Hz") return FrequencyHz{n};
  if (unit == "kHz") return FrequencyHz{n * 1e3};
  if (unit == "MHz") return FrequencyHz{n * 1e6};
  if (unit == "GHz") return FrequencyHz{n * 1e9};
  bad_unit(v, "Hz, kHz, MHz, GHz");
}

std::optional<BandwidthHz> parse_bandwidth(std::string_view v) {
  if (trim(v) == "inf") return std::nullopt;
  return BandwidthHz{parse_frequency(v).value()};
}

DistanceMeters parse_distance(std::string_view v) {
  const auto [n, unit] = split_number(v);
  if (unit == "m") return DistanceMeters{n};
  if (unit == "km") return DistanceMeters{n * 1e3};
  bad_unit(v, "m, km");
}

SweepSpec ScenarioConfig::sweep_spec() const {
  if (!sweep) throw ParseError("config has no sweep block");
  SweepSpec spec{link, noise, sweep->parameter,
                 sweep_values(sweep->start, sweep->stop, sweep->points, sweep->spacing), nullptr};
  if (cap_to_profile && profile_id) spec.eirp_cap = find_profile(*profile_id);
  return spec;
}

ScenarioConfig parse_config(std::string_view text) {
  Document doc{text};

  if (doc.parse("schema", parse_int) != 1) {
    throw ParseError("unsupported schema version (expected schema = 1)");
  }
  const std::string topology = doc.require("topology");

  const Decibel noise_figure = parse_noise_figure(doc);
  const auto bandwidth = doc.parse("bandwidth", parse_bandwidth);
  const TemperatureKelvin temperature = doc.parse_or("temperature", parse_temperature, TemperatureKelvin{300.0});

  std::optional<LinkSource> link;
  try {
    if (topology == "monostatic" || topology == "bistatic") {
      const PowerWatts p_c = doc.parse("carrier.power", parse_power);
      const FrequencyHz f = doc.parse("carrier.frequency", parse_frequency);
      const BackscatterDevice device = parse_device(doc);

      Scenario s{CarrierSource{p_c, GainDbi{0.0}}, device, Receiver{GainDbi{0.0}, noise_figure},
                 Monostatic{DistanceMeters{1.0}}, f, bandwidth, temperature};
      if (topology == "monostatic") {
        const auto shared = doc.has("antenna.gain") ? std::optional{doc.parse("antenna.gain", parse_gain)}
                                                    : std::nullopt;
        if (!shared && !(doc.has("carrier.gain") && doc.has("receiver.gain"))) {
          throw ParseError("monostatic topology needs antenna.gain (or both carrier.gain and receiver.gain)");
        }
        s.source.gain = shared ? doc.parse_or("carrier.gain", parse_gain, *shared) : doc.parse("carrier.gain", parse_gain);
        s.receiver.gain =
            shared ? doc.parse_or("receiver.gain", parse_gain, *shared) : doc.parse("receiver.gain", parse_gain);
        s.geometry = Monostatic{doc.parse("geometry.r", parse_distance)};
      } else {
        s.source.gain = doc.parse("carrier.gain", parse_gain);
        s.receiver.gain = doc.parse("receiver.gain", parse_gain);
        s.geometry = Bistatic{doc.parse("geometry.r_c", parse_distance), doc.parse("geometry.r_rx", parse_distance)};
      }
      s.validate();
      link = s;
    } else if (topology == "ambient") {
      FrequencyHz f{1.0};
      bool from_preset = false;
      AmbientLevel level = parse_ambient_level(doc, f, from_preset);
      if (!from_preset || doc.has("carrier.frequency")) f = doc.parse("carrier.frequency", parse_frequency);
      link = AmbientScenario{level,
                             parse_device(doc),
                             Receiver{doc.parse("receiver.gain", parse_gain), noise_figure},
                             doc.parse("geometry.r_rx", parse_distance),
                             f,
                             bandwidth};
    } else if (topology == "fixed") {
      link = FixedReceivedPower{doc.parse("received.power", parse_power), bandwidth};
    } else {
      throw ParseError("topology must be monostatic, bistatic, ambient or fixed (got '" + topology + "')");
    }
  } catch (const ConfigurationError& e) {
    throw ParseError(e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }

  NoiseModel noise{doc.parse_or("noise.n0", parse_density, kDefaultNoiseDensityDbmPerHz), noise_figure};
  const std::string mode = doc.take("noise.mode").value_or("fixed");
  if (mode == "thermal") {
    if (doc.has("noise.n0")) throw ParseError("noise.n0 and noise.mode = thermal are mutually exclusive");
    noise = NoiseModel::thermal(temperature, noise_figure);
  } else if (mode != "fixed") {
    throw ParseError("noise.mode must be fixed or thermal");
  }

  ScenarioConfig config{*link, noise, std::nullopt, false, std::nullopt};

  if (auto id = doc.take("regulatory.profile")) {
    if (find_profile(*id) == nullptr) throw ParseError("unknown regulatory profile '" + *id + "'");
    config.profile_id = *id;
  }
  config.cap_to_profile = doc.parse_or("regulatory.cap", parse_bool, false);
  if (config.cap_to_profile && !config.profile_id) {
    throw ParseError("regulatory.cap needs regulatory.profile");
  }

  if (doc.has("sweep.parameter")) {
    const std::string name = doc.require("sweep.parameter");
    const auto parameter = parse_parameter(name);
    if (!parameter) throw ParseError("unknown sweep parameter '" + name + "'");
    SweepBlock block{*parameter, 0.0, 0.0, 0, Spacing::kLinear};
    block.start = doc.parse("sweep.start", [&](std::string_view v) { return parse_sweep_bound(*parameter, v); });
    block.stop = doc.parse("sweep.stop", [&](std::string_view v) { return parse_sweep_bound(*parameter, v); });
    block.points = doc.parse("sweep.points", parse_int);
    const std::string spacing = doc.take("sweep.spacing").value_or("linear");
    if (spacing == "log") {
      block.spacing = Spacing::kLog;
    } else if (spacing != "linear") {
      throw ParseError("sweep.spacing must be linear or log");
    }
    if (block.points < 2) throw ParseError("sweep.points must be >= 2");
    if (!(block.start < block.stop)) throw ParseError("sweep.start must be < sweep.stop");
    if (block.spacing == Spacing::kLog && block.start <= 0.0) {
      throw ParseError("log spacing needs a positive sweep.start");
    }
    try {
      check_applicable(config.link, block.parameter);
    } catch (const ConfigurationError& e) {
      throw ParseError(e.what());
    }
    config.sweep = block;
  }

  doc.reject_leftovers();
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in{path};
  if (!in) throw ParseError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace bscap

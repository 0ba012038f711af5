#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hcfield {

/// CSV with `# key=value` comment headers so every artifact is re-runnable
/// from its own header. Numbers are written with max round-trip precision.
class CsvWriter {
 public:
  void add_param(const std::string& key, const std::string& value) {
    params_.emplace_back(key, value);
  }
  void add_param(const std::string& key, double value) {
    params_.emplace_back(key, format(value));
  }
  void add_param(const std::string& key, uint64_t value) {
    params_.emplace_back(key, std::to_string(value));
  }

  void set_columns(std::vector<std::string> cols) { columns_ = std::move(cols); }
  void add_row(const std::vector<double>& row) { rows_.push_back(row); }

  std::string str() const {
    std::ostringstream os;
    for (const auto& [k, v] : params_) os << "# " << k << "=" << v << "\n";
    for (size_t i = 0; i < columns_.size(); ++i)
      os << (i ? "," : "") << columns_[i];
    os << "\n";
    for (const auto& row : rows_) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format(row[i]);
      os << "\n";
    }
    return os.str();
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << str();
  }

  static std::string format(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace hcfield

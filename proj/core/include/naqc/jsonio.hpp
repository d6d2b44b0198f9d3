#pragma once

#include <string>
#include <vector>

namespace naqc {

/// Doubles serialized with 17 significant digits ("%.17g"), enough to
/// round-trip any IEEE-754 binary64 value through decimal text.
std::string format_double(double v);

/// Minimal ordered JSON emitter for the library's report formats.
/// Keys are emitted in insertion order; numbers go through format_double.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value_array(const std::vector<double>& v);
  JsonWriter& value_array(const std::vector<int>& v);

  const std::string& str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

}  // namespace naqc

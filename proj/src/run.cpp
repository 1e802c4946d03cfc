// placeholder, filled in by the run module
namespace cusemi {}

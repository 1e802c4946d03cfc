// placeholder, filled in by the specfile module
namespace cusemi {}

// placeholder entry point, replaced by the real command-line driver
int main() { return 0; }

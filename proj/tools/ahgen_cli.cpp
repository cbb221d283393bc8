// Placeholder main; the real CLI lands once the library settles.
int main() { return 0; }

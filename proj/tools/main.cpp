#include <cstdio>

int main() {
    std::puts("parabtool: subcommands arrive with the CLI module");
    return 0;
}

class Sample {
    int run(int x) {
        if (x > 0) {
            x = 1;
        } else {
            x = 2;
        }
        return x;
    }
}

class Sample {
    void run() {
        int x = 1;
    }
}

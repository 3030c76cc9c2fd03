class Sample {
    int size()
    {
        return 4;
    }
}

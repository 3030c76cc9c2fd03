class Sample
{
    @Meta(priority=2, name="core")
    void tagged()
    {
        int y = 1 + 2;
    }
}

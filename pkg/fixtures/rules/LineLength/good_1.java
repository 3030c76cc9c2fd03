class Sample
{
    String narrow = "short";
}

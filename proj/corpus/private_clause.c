void main()
{
    int t;

#pragma omp parallel private(t)
    {
        t = 0;
        t = t + 1;
    }
}

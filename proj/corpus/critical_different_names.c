int x;

void main()
{
#pragma omp parallel
    {
#pragma omp critical (alpha)
        { x = x + 1; }
#pragma omp critical (beta)
        { x = x + 2; }
    }
}
